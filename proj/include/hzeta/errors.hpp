#ifndef HZETA_ERRORS_HPP
#define HZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hzeta {

struct unknown_atom_error : std::runtime_error {
    explicit unknown_atom_error(const std::string& atom)
        : std::runtime_error("unknown constant atom: " + atom), atom_name(atom) {}
    std::string atom_name;
};

struct nonconvergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct precision_unreachable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct order_exceeded_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct divergence_error : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace hzeta

#endif
