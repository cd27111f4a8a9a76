#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gocohom/verify.hpp"

namespace gocohom {

struct Command {
    enum class Kind { Basis, Mul, Coords, Chern, Verify, Series, Table } kind =
        Kind::Table;
    int n = 1;
    int degree = 0;
    int max_degree = 10;
    int chern_index = 1;
    int jobs = 1;
    std::string format = "text";  // text | json
    std::string suite = "all";    // all | koszul | presentation | cohomology | chern
    std::string ring = "H";       // series selector: H | C | B | odd
    std::string cache_dir;        // empty disables the on-disk cache
    std::vector<std::string> exprs;
};

// Runs a command; normal results go to out, errors to err. Returns the exit
// status: 0 on success, 1 when a verification or evaluation fails, 2 on bad
// input.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace gocohom
