#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gocohom/cache.hpp"
#include "gocohom/charclass.hpp"

namespace gocohom {

enum class Suite { All, Koszul, Presentation, Cohomology, Chern };

struct VerifyOptions {
    int n = 1;
    int max_degree = 10;
    Suite suite = Suite::All;
    int jobs = 1;
    const DiskCache* cache = nullptr;
};

struct CheckLine {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<CheckLine> run_suite(const VerifyOptions& opt);

// One line per check; returns true when everything passed.
bool print_report(const std::vector<CheckLine>& lines, std::ostream& out);

// Expected labels of H^0..H^5, with the case splits in n.
std::vector<std::vector<std::string>> reference_small_table(int n);

// Cache-aware helpers (pass cache = nullptr to compute directly).
std::size_t b_dim_cached(int n, int d, const DiskCache* cache);
std::vector<LabeledElem> basis_cached(int n, int d, const DiskCache* cache);

}  // namespace gocohom
