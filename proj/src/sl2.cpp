#include "modlift/sl2.hpp"

#include <cctype>

#include "modlift/errors.hpp"

namespace modlift {

Sl2Element sl2_identity(const GaloisField& field) {
  return {field.one(), field.zero(), field.zero(), field.one()};
}

Sl2Element sl2_multiply(const GaloisField& f, const Sl2Element& g, const Sl2Element& h) {
  return {f.add(f.mul(g.a, h.a), f.mul(g.b, h.c)), f.add(f.mul(g.a, h.b), f.mul(g.b, h.d)),
          f.add(f.mul(g.c, h.a), f.mul(g.d, h.c)), f.add(f.mul(g.c, h.b), f.mul(g.d, h.d))};
}

Sl2Element sl2_frobenius(const GaloisField& f, const Sl2Element& g, unsigned k) {
  return {f.frobenius(g.a, k), f.frobenius(g.b, k), f.frobenius(g.c, k), f.frobenius(g.d, k)};
}

FieldElement sl2_determinant(const GaloisField& f, const Sl2Element& g) {
  return f.sub(f.mul(g.a, g.d), f.mul(g.b, g.c));
}

Sl2Generators sl2_generators(const GaloisField& field) {
  const FieldElement one = field.one();
  const FieldElement zero = field.zero();
  const FieldElement lambda = field.generator();
  return {{one, zero, one, one}, {one, one, zero, one}, {lambda, zero, zero, field.inv(lambda)}};
}

FieldMatrix field_identity(const GaloisField& field, std::size_t n) {
  FieldMatrix m{n, n, std::vector<FieldElement>(n * n, field.zero())};
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

FieldMatrix field_multiply(const GaloisField& field, const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw DimensionMismatch("field_multiply: inner dimensions differ");
  FieldMatrix out{a.rows, b.cols, std::vector<FieldElement>(a.rows * b.cols, field.zero())};
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (field.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) = field.add(out.at(i, j), field.mul(a.at(i, k), b.at(k, j)));
      }
    }
  }
  return out;
}

namespace {

// Homogeneous binary form stored by y-degree: c[j] is the coefficient of x^(d-j) y^j.
using Form = std::vector<FieldElement>;

Form multiply_forms(const GaloisField& field, const Form& u, const Form& v) {
  Form out(u.size() + v.size() - 1, field.zero());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] = field.add(out[i + j], field.mul(u[i], v[j]));
  }
  return out;
}

}  // namespace

FieldMatrix action_matrix(const GaloisField& field, const Sl2Element& g, unsigned n) {
  const Form x_image{g.a, g.b};
  const Form y_image{g.c, g.d};
  FieldMatrix m{n + 1u, n + 1u, std::vector<FieldElement>((n + 1u) * (n + 1u), field.zero())};
  for (unsigned k = 0; k <= n; ++k) {
    Form row{field.one()};
    for (unsigned i = 0; i < n - k; ++i) row = multiply_forms(field, row, x_image);
    for (unsigned i = 0; i < k; ++i) row = multiply_forms(field, row, y_image);
    for (unsigned j = 0; j <= n; ++j) m.at(k, j) = row[j];
  }
  return m;
}

ResidueMatrix restrict_scalars(const GaloisField& field, const FieldMatrix& m) {
  const std::size_t r = field.r();
  ResidueMatrix out(ResidueRing(field.p(), 1), m.rows * r, m.cols * r);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      block_set(out, i + 1, j + 1, field.regular_representation(m.at(i, j)));
    }
  }
  return out;
}

FieldMatrix frobenius_twist(const GaloisField& field, const FieldMatrix& m, unsigned k) {
  FieldMatrix out = m;
  for (auto& x : out.entries) x = field.frobenius(x, k);
  return out;
}

ResidueMatrix dual_matrix(const ResidueMatrix& m) { return mat_inverse(m).transpose(); }

RepresentationSpec RepresentationSpec::basic(std::uint32_t p, unsigned r, unsigned n) {
  if (!is_prime(p) || r < 1) throw DomainError("RepresentationSpec: invalid field p=" + std::to_string(p));
  if (n > p) {
    throw DomainError("RepresentationSpec: V" + std::to_string(n) + " out of range 0.." + std::to_string(p));
  }
  RepresentationSpec spec(p, r, Kind::Basic);
  spec.n_ = n;
  return spec;
}

RepresentationSpec RepresentationSpec::lambda(std::uint32_t p, unsigned r) {
  if (!is_prime(p) || r < 1) throw DomainError("RepresentationSpec: invalid field p=" + std::to_string(p));
  return RepresentationSpec(p, r, Kind::Lambda);
}

RepresentationSpec RepresentationSpec::dual(const RepresentationSpec& inner) {
  RepresentationSpec spec(inner.p_, inner.r_, Kind::Dual);
  spec.inner_ = std::make_shared<const RepresentationSpec>(inner);
  return spec;
}

RepresentationSpec RepresentationSpec::twist(const RepresentationSpec& inner, unsigned k) {
  if (k >= inner.r_) {
    throw DomainError("RepresentationSpec: twist exponent " + std::to_string(k) + " must be < r");
  }
  RepresentationSpec spec(inner.p_, inner.r_, Kind::Twist);
  spec.k_ = k;
  spec.inner_ = std::make_shared<const RepresentationSpec>(inner);
  return spec;
}

RepresentationSpec RepresentationSpec::parse(std::uint32_t p, unsigned r, const std::string& label) {
  auto fail = [&]() -> RepresentationSpec { throw DomainError("unrecognised module label '" + label + "'"); };
  if (label == "Lambda") return lambda(p, r);
  if (label.size() >= 2 && label[0] == 'V') {
    const std::string digits = label.substr(1);
    for (const char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return fail();
    }
    if (digits.size() > 6) return fail();
    return basic(p, r, static_cast<unsigned>(std::stoul(digits)));
  }
  if (label.back() != ')') return fail();
  const auto open = label.find('(');
  if (open == std::string::npos) return fail();
  const std::string head = label.substr(0, open);
  const std::string body = label.substr(open + 1, label.size() - open - 2);
  if (head == "dual") return dual(parse(p, r, body));
  if (head.rfind("twist", 0) == 0 && head.size() > 5) {
    const std::string digits = head.substr(5);
    for (const char ch : digits) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return fail();
    }
    if (digits.size() > 6) return fail();
    return twist(parse(p, r, body), static_cast<unsigned>(std::stoul(digits)));
  }
  return fail();
}

std::uint64_t RepresentationSpec::q() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < r_; ++i) q *= p_;
  return q;
}

std::size_t RepresentationSpec::dimension() const {
  switch (kind_) {
    case Kind::Basic: return (n_ + 1u) * r_;
    case Kind::Lambda: return (p_ + 1u) * r_;
    case Kind::Dual:
    case Kind::Twist: return inner_->dimension();
  }
  return 0;
}

std::string RepresentationSpec::label() const {
  switch (kind_) {
    case Kind::Basic: return "V" + std::to_string(n_);
    case Kind::Lambda: return "Lambda";
    case Kind::Dual: return "dual(" + inner_->label() + ")";
    case Kind::Twist: return "twist" + std::to_string(k_) + "(" + inner_->label() + ")";
  }
  return {};
}

ResidueMatrix representation_image(const GaloisField& field, const RepresentationSpec& spec, const Sl2Element& g) {
  if (field.p() != spec.p() || field.r() != spec.r()) throw DomainError("representation_image: field mismatch");
  switch (spec.kind()) {
    case RepresentationSpec::Kind::Basic:
      return restrict_scalars(field, action_matrix(field, g, spec.degree()));
    case RepresentationSpec::Kind::Lambda:
      return dual_matrix(restrict_scalars(field, action_matrix(field, g, spec.p())));
    case RepresentationSpec::Kind::Dual:
      return dual_matrix(representation_image(field, spec.inner(), g));
    case RepresentationSpec::Kind::Twist:
      return representation_image(field, spec.inner(), sl2_frobenius(field, g, spec.twist_power()));
  }
  throw DomainError("representation_image: unknown kind");
}

GeneratorImages generator_images(const GaloisField& field, const RepresentationSpec& spec) {
  const Sl2Generators gens = sl2_generators(field);
  return {representation_image(field, spec, gens.alpha), representation_image(field, spec, gens.beta),
          representation_image(field, spec, gens.gamma)};
}

}  // namespace modlift
