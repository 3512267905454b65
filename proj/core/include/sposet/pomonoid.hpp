#ifndef SPOSET_POMONOID_HPP_
#define SPOSET_POMONOID_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sposet/relation.hpp"

namespace sposet {

//! A single axiom violation found by a validator: which axiom failed and the
//! witnessing elements (meaning depends on the axiom, documented per check).
struct Violation {
  std::string              axiom;
  std::vector<std::size_t> witness;

  std::string to_string() const;
};

//! Result of validating a pomonoid or an S-poset.  Structural problems
//! (wrong table dimensions, indices out of range) throw std::invalid_argument
//! before any axiom is looked at; this report only carries axiom violations.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept {
    return violations.empty();
  }

  std::string to_string() const;
};

//! Thrown by the make_* factories when a structurally well-formed candidate
//! fails the axioms.  Carries the full violation report, so callers (the
//! command-line frontend in particular) can tell "this is a broken
//! structure" apart from "this input could not even be read".
class validation_error : public std::invalid_argument {
 public:
  validation_error(std::string const& what, ValidationReport report)
      : std::invalid_argument(what), _report(std::move(report)) {}

  ValidationReport const& report() const noexcept {
    return _report;
  }

 private:
  ValidationReport _report;
};

//! A finite partially ordered monoid: multiplication table, identity, and a
//! partial order compatible with multiplication on both sides
//! (a <= b implies ca <= cb and ac <= bc).
//!
//! The type itself is plain data and does not enforce the axioms — the
//! validators and enumeration cross-checks need to be able to hold broken
//! candidates.  Everything downstream assumes a validated pomonoid.
class Pomonoid {
 public:
  //! \p mul is row-major: mul[a * n + b] = a * b.  Throws
  //! std::invalid_argument on dimension or index mismatches.
  Pomonoid(std::size_t              n,
           std::vector<std::size_t> mul,
           std::size_t              one,
           Relation                 leq,
           std::vector<std::string> names = {});

  std::size_t size() const noexcept {
    return _n;
  }

  std::size_t mul(std::size_t a, std::size_t b) const {
    return _mul[a * _n + b];
  }

  std::size_t one() const noexcept {
    return _one;
  }

  bool leq(std::size_t a, std::size_t b) const {
    return _leq(a, b);
  }

  Relation const& order() const noexcept {
    return _leq;
  }

  std::vector<std::size_t> const& table() const noexcept {
    return _mul;
  }

  //! All e with e * e = e, ascending.
  std::vector<std::size_t> idempotents() const;

  std::string const& name(std::size_t a) const {
    return _names[a];
  }

  std::vector<std::string> const& names() const noexcept {
    return _names;
  }

  //! Index of the element with the given name, or size() if absent.
  std::size_t index_of(std::string const& name) const;

  bool operator==(Pomonoid const& other) const;

 private:
  std::size_t              _n;
  std::vector<std::size_t> _mul;
  std::size_t              _one;
  Relation                 _leq;
  std::vector<std::string> _names;
};

using PomonoidPtr = std::shared_ptr<Pomonoid const>;

//! Check the pomonoid axioms: identity, associativity, partial order
//! (reflexive, antisymmetric, transitive) and two-sided compatibility of the
//! order with multiplication.  The order is taken exactly as given — no
//! closure is applied here.
//!
//! Violation witnesses: "identity" -> {a}; "associativity" -> {a, b, c};
//! "reflexivity" -> {a}; "antisymmetry" -> {a, b}; "transitivity" ->
//! {a, b, c}; "compatibility-left" / "compatibility-right" -> {a, b, c}
//! meaning a <= b but ca <= cb (resp. ac <= bc) fails.
ValidationReport validate_pomonoid(Pomonoid const& S);

//! Convenience: construct and validate in one go, throwing
//! std::invalid_argument with the report text if an axiom fails.
PomonoidPtr make_pomonoid(std::size_t              n,
                          std::vector<std::size_t> mul,
                          std::size_t              one,
                          Relation                 leq,
                          std::vector<std::string> names = {});

}  // namespace sposet
#endif  // SPOSET_POMONOID_HPP_
