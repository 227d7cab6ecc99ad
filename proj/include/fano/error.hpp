#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// What went wrong; verification turns these into report entries instead of aborting.
enum class Errc {
    truncation,        // coefficient index beyond truncation order
    invalid_argument,  // malformed input to an operation
    model,             // equation model violates its own shape (odd Pfaffian sum, ...)
    validation,        // structural invariant of a record fails
    not_terminal,      // positive-dimensional singular locus detected
    non_isolated,      // quotient weight divisible by the index
    ambiguity,         // no monomial certificate pins down the eliminated variables
    inconsistency,     // exact arithmetic produced a fractional count
    unsupported_index, // operation defined only for index 1
    missing_target,    // projection target absent from the catalogue
    cycle,             // projection graph is not acyclic
    parse,             // catalogue input malformed
    unsupported,       // no computation route for this record
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace fano
