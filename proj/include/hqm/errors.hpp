#pragma once

#include <stdexcept>
#include <string>

namespace hqm {

// Attractive coupling absent: omega*k*m <= 0 or m = 0.
class no_bound_state_error : public std::domain_error {
  public:
    explicit no_bound_state_error(const std::string& what) : std::domain_error(what) {}
};

// The effective potential has no attractive well for these parameters.
class no_well_error : public std::domain_error {
  public:
    explicit no_well_error(const std::string& what) : std::domain_error(what) {}
};

// Grid spacing too coarse for the requested solve; carries a usable npts.
class under_resolved_error : public std::domain_error {
  public:
    under_resolved_error(const std::string& what, long suggested)
        : std::domain_error(what), suggested_npts(suggested) {}
    long suggested_npts;
};

class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hqm
