#pragma once

/// Dense univariate polynomials over a cyclotomic field.

#include "skeinrep/cyclotomic.hpp"

#include <vector>

namespace skeinrep {

class Polynomial {
 public:
  explicit Polynomial(const CycField& f) : field_(&f) {}

  static Polynomial constant(const CycField& f, CycNum c) {
    Polynomial p(f);
    if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
    return p;
  }

  static Polynomial variable(const CycField& f) {
    Polynomial p(f);
    p.coeffs_.push_back(CycNum::zero(f));
    p.coeffs_.push_back(CycNum::one(f));
    return p;
  }

  static Polynomial from_coeffs(const CycField& f, std::vector<CycNum> c) {
    Polynomial p(f);
    p.coeffs_ = std::move(c);
    p.trim();
    return p;
  }

  const CycField& field() const { return *field_; }

  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  bool is_zero() const { return coeffs_.empty(); }

  CycNum coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return CycNum::zero(*field_);
    return coeffs_[static_cast<std::size_t>(k)];
  }

  const std::vector<CycNum>& coeffs() const { return coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.field());
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), CycNum::zero(a.field()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      if (i < a.coeffs_.size()) out.coeffs_[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) out.coeffs_[i] += b.coeffs_[i];
    }
    out.trim();
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.field());
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), CycNum::zero(a.field()));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
      if (i < a.coeffs_.size()) out.coeffs_[i] += a.coeffs_[i];
      if (i < b.coeffs_.size()) out.coeffs_[i] -= b.coeffs_[i];
    }
    out.trim();
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.field());
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, CycNum::zero(a.field()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.trim();
    return out;
  }

  friend Polynomial operator*(const Polynomial& a, const CycNum& s) {
    Polynomial out(a.field());
    if (s.is_zero()) return out;
    out.coeffs_ = a.coeffs_;
    for (auto& c : out.coeffs_) c *= s;
    out.trim();
    return out;
  }
  friend Polynomial operator*(const CycNum& s, const Polynomial& a) { return a * s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  CycNum eval(const CycNum& x) const {
    CycNum acc = CycNum::zero(*field_);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  const CycField* field_;
  std::vector<CycNum> coeffs_;
};

}  // namespace skeinrep
