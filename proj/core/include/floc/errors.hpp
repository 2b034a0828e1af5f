#ifndef FLOC_ERRORS_HPP
#define FLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace floc {

/// Base class for all input-validation failures raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class disconnected_input final : public error {
public:
    explicit disconnected_input(const std::string& what) : error(what) {}
};

class cyclic_tree_input final : public error {
public:
    explicit cyclic_tree_input(const std::string& what) : error(what) {}
};

class bad_dimension final : public error {
public:
    explicit bad_dimension(const std::string& what) : error(what) {}
};

class cycle_too_short final : public error {
public:
    explicit cycle_too_short(const std::string& what) : error(what) {}
};

class graph_too_large final : public error {
public:
    explicit graph_too_large(const std::string& what) : error(what) {}
};

class not_a_tree final : public error {
public:
    explicit not_a_tree(const std::string& what) : error(what) {}
};

class bounds_too_large final : public error {
public:
    explicit bounds_too_large(const std::string& what) : error(what) {}
};

}  // namespace floc

#endif
