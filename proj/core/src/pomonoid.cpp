#include "sposet/pomonoid.hpp"

#include <sstream>
#include <stdexcept>

namespace sposet {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << axiom << " [";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    os << (i ? ", " : "") << witness[i];
  }
  os << "]";
  return os.str();
}

std::string ValidationReport::to_string() const {
  if (ok()) {
    return "ok";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    os << (i ? "; " : "") << violations[i].to_string();
  }
  return os.str();
}

Pomonoid::Pomonoid(std::size_t              n,
                   std::vector<std::size_t> mul,
                   std::size_t              one,
                   Relation                 leq,
                   std::vector<std::string> names)
    : _n(n), _mul(std::move(mul)), _one(one), _leq(std::move(leq)), _names(std::move(names)) {
  if (_n == 0) {
    throw std::invalid_argument("pomonoid: carrier must be non-empty");
  }
  if (_mul.size() != _n * _n) {
    throw std::invalid_argument("pomonoid: multiplication table has wrong size");
  }
  for (std::size_t v : _mul) {
    if (v >= _n) {
      throw std::invalid_argument("pomonoid: table entry out of range");
    }
  }
  if (_one >= _n) {
    throw std::invalid_argument("pomonoid: identity index out of range");
  }
  if (_leq.size() != _n) {
    throw std::invalid_argument("pomonoid: order relation has wrong size");
  }
  if (_names.empty()) {
    _names.resize(_n);
    for (std::size_t i = 0; i < _n; ++i) {
      _names[i] = (i == _one) ? "1" : "s" + std::to_string(i);
    }
  } else if (_names.size() != _n) {
    throw std::invalid_argument("pomonoid: name list has wrong size");
  }
}

std::vector<std::size_t> Pomonoid::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < _n; ++e) {
    if (mul(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

std::size_t Pomonoid::index_of(std::string const& name) const {
  for (std::size_t i = 0; i < _n; ++i) {
    if (_names[i] == name) {
      return i;
    }
  }
  return _n;
}

bool Pomonoid::operator==(Pomonoid const& other) const {
  return _n == other._n && _mul == other._mul && _one == other._one && _leq == other._leq;
}

ValidationReport validate_pomonoid(Pomonoid const& S) {
  ValidationReport    rep;
  std::size_t const n = S.size();

  for (std::size_t a = 0; a < n; ++a) {
    if (S.mul(S.one(), a) != a || S.mul(a, S.one()) != a) {
      rep.violations.push_back({"identity", {a}});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c))) {
          rep.violations.push_back({"associativity", {a, b, c}});
        }
      }
    }
  }
  Relation const& leq = S.order();
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq(a, a)) {
      rep.violations.push_back({"reflexivity", {a}});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq(a, b) && leq(b, a)) {
        rep.violations.push_back({"antisymmetry", {a, b}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(b, c) && !leq(a, c)) {
          rep.violations.push_back({"transitivity", {a, b, c}});
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) {
        continue;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (!leq(S.mul(c, a), S.mul(c, b))) {
          rep.violations.push_back({"compatibility-left", {a, b, c}});
        }
        if (!leq(S.mul(a, c), S.mul(b, c))) {
          rep.violations.push_back({"compatibility-right", {a, b, c}});
        }
      }
    }
  }
  return rep;
}

PomonoidPtr make_pomonoid(std::size_t              n,
                          std::vector<std::size_t> mul,
                          std::size_t              one,
                          Relation                 leq,
                          std::vector<std::string> names) {
  auto S   = std::make_shared<Pomonoid const>(n, std::move(mul), one, std::move(leq),
                                              std::move(names));
  auto rep = validate_pomonoid(*S);
  if (!rep.ok()) {
    // Render the message before handing the report to the exception: argument
    // evaluation order is unspecified, so the move may happen first.
    auto msg = "pomonoid axioms fail: " + rep.to_string();
    throw validation_error(msg, std::move(rep));
  }
  return S;
}

}  // namespace sposet
