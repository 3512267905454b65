#include "sposet/relation.hpp"

namespace sposet {

Relation Relation::identity(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.set(i, i);
  }
  return r;
}

Relation Relation::from_pairs(std::size_t n,
                              std::vector<std::pair<std::size_t, std::size_t>> const& pairs) {
  Relation r(n);
  for (auto const& [i, j] : pairs) {
    r.set(i, j);
  }
  return r;
}

void Relation::reflexive_close() {
  for (std::size_t i = 0; i < _n; ++i) {
    set(i, i);
  }
}

void Relation::transitive_close() {
  for (std::size_t k = 0; k < _n; ++k) {
    for (std::size_t i = 0; i < _n; ++i) {
      if (!(*this)(i, k)) {
        continue;
      }
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(k, j)) {
          set(i, j);
        }
      }
    }
  }
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < _n; ++i) {
    if (!(*this)(i, i)) {
      return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t k = 0; k < _n; ++k) {
      if (!(*this)(i, k)) {
        continue;
      }
      for (std::size_t j = 0; j < _n; ++j) {
        if ((*this)(k, j) && !(*this)(i, j)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = i + 1; j < _n; ++j) {
      if ((*this)(i, j) && (*this)(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::is_diagonal() const {
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      if (((*this)(i, j)) != (i == j)) {
        return false;
      }
    }
  }
  return true;
}

Relation Relation::transposed() const {
  Relation r(_n);
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      if ((*this)(i, j)) {
        r.set(j, i);
      }
    }
  }
  return r;
}

Relation Relation::meet(Relation const& other) const {
  Relation r(_n);
  for (std::size_t i = 0; i < _n * _n; ++i) {
    r._bits[i] = (_bits[i] && other._bits[i]) ? 1 : 0;
  }
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < _n; ++i) {
    for (std::size_t j = 0; j < _n; ++j) {
      if ((*this)(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (char b : _bits) {
    c += (b != 0);
  }
  return c;
}

bool Relation::operator<(Relation const& other) const {
  if (_n != other._n) {
    return _n < other._n;
  }
  return _bits < other._bits;
}

}  // namespace sposet
