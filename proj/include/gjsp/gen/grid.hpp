#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gjsp/gen/generator.hpp"

namespace gjsp {

struct BenchmarkGrid {
  std::vector<int> jobs;
  std::vector<int> machines;
  std::vector<int> rddd;
  std::vector<int> speeds;
  std::vector<Distribution> distributions;
  int seeds_per_cell = 1;
  std::uint64_t master_seed = 0;

  std::size_t size() const {
    return jobs.size() * machines.size() * rddd.size() * speeds.size() * distributions.size() *
           static_cast<std::size_t>(seeds_per_cell);
  }
};

// 6 x 6 x 3 x 3 x 3 x 10 configuration grid of the reference benchmark.
BenchmarkGrid full_grid();

// {3,5,8} x {3,5,8} x {0,1,2} x {1,3} x 3 distributions x 10 seeds.
BenchmarkGrid desk_grid();

// Seed of replicate `replicate` of a grid cell.
std::uint64_t replicate_seed(std::uint64_t master_seed, int jobs, int machines, int rddd,
                             int speeds, Distribution dist, int replicate);

// Cartesian product ordered by (jobs, machines, rddd, speeds, distribution, replicate).
std::vector<GeneratorConfig> enumerate_grid(const BenchmarkGrid& grid);

// key=value grid description: jobs, machines, rddd, speeds, dist (comma lists),
// seeds, master_seed. '#' starts a comment.
BenchmarkGrid parse_grid(const std::string& text);
std::string grid_to_text(const BenchmarkGrid& grid);

}  // namespace gjsp
