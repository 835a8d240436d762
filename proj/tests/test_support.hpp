#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sma/grid.hpp"
#include "sma/grid_io.hpp"

namespace test_support {

inline std::string fixture_path(const std::string& name) {
    return sma::fixtures_dir() + "/" + name + ".csv";
}

inline sma::SignedArray load_fixture(const std::string& name) {
    return sma::load_grid_file(fixture_path(name));
}

inline sma::SignedArray transpose(const sma::SignedArray& a) {
    std::vector<long long> out;
    out.reserve(a.cell_count());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r) out.push_back(a(r, c));
    }
    return {a.cols(), a.rows(), std::move(out)};
}

inline std::map<long long, int> entry_multiset(const sma::SignedArray& a) {
    std::map<long long, int> counts;
    for (long long e : a.entries()) ++counts[e];
    return counts;
}

/// Uniform random grid with entries in ±{1,...,50}; deterministic per seed.
inline sma::SignedArray random_grid(std::mt19937& rng, std::size_t max_dim = 6) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long long> magnitude(1, 50);
    std::bernoulli_distribution negative(0.5);
    const std::size_t rows = dim(rng), cols = dim(rng);
    std::vector<long long> entries(rows * cols);
    for (auto& e : entries) e = (negative(rng) ? -1 : 1) * magnitude(rng);
    return {rows, cols, std::move(entries)};
}

inline std::vector<long long> row_sums_of(const sma::SignedArray& a) {
    std::vector<long long> sums(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) sums[r] += a(r, c);
    }
    return sums;
}

}  // namespace test_support
