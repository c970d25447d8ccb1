#include "walg/morphism.hpp"

#include <stdexcept>

#include "walg/sl2.hpp"

namespace walg {

namespace {

bool same_shape(const Presentation& a, const Presentation& b) {
  if (a.names() != b.names()) return false;
  if (a.localized() != b.localized()) return false;
  if (a.localized() && a.lattice() != b.lattice()) return false;
  return true;
}

}  // namespace

GenMorphism::GenMorphism(const Presentation& source, const Presentation& target,
                         std::vector<NCPoly> images)
    : src_(&source), tgt_(&target), images_(std::move(images)), loc_coeff_(1) {
  if (images_.size() != source.size())
    throw std::invalid_argument("morphism: expected " + std::to_string(source.size()) +
                                " images, got " + std::to_string(images_.size()));
  for (const NCPoly& img : images_)
    for (const auto& [m, c] : img.terms()) {
      (void)c;
      if (m.width() != target.size())
        throw std::invalid_argument("morphism: image monomial has width " +
                                    std::to_string(m.width()) + ", target has " +
                                    std::to_string(target.size()) + " generators");
    }

  if (!source.localized()) return;

  if (!target.localized())
    throw NotInvertibleImage("source inverts its last generator but the target inverts nothing");
  if (source.lattice() == Lattice::Half && target.lattice() != Lattice::Half)
    throw NotInvertibleImage("half exponents in the source need half exponents in the target");

  const NCPoly& limg = images_.back();
  std::string bad = "image of the inverted generator must be c * " +
                    target.name(target.localized_gen()) + "^1 or c * " +
                    target.name(target.localized_gen()) + "^-1, got " + target.str(limg);
  if (limg.term_count() != 1) throw NotInvertibleImage(bad);
  const Monomial& m = limg.leading_monomial();
  for (std::uint32_t ex : m.head)
    if (ex != 0) throw NotInvertibleImage(bad);
  if (m.last == HalfInt(1))
    loc_sign_ = 1;
  else if (m.last == HalfInt(-1))
    loc_sign_ = -1;
  else
    throw NotInvertibleImage(bad);
  loc_coeff_ = limg.leading_coeff();
  if (source.lattice() == Lattice::Half && loc_coeff_ != Rational(1))
    throw NotInvertibleImage("half exponents force coefficient 1 on the inverted image, got " +
                             loc_coeff_.str());
}

NCPoly GenMorphism::apply(const NCPoly& p) const {
  NCPoly out;
  const std::size_t n = src_->size();
  for (const auto& [m, c] : p.terms()) {
    NCPoly acc = tgt_->scalar(c);
    for (std::size_t g = 0; g + 1 < n; ++g)
      if (m.head[g] != 0)
        acc = tgt_->multiply(acc, tgt_->power(images_[g], static_cast<long>(m.head[g])));
    if (!m.last.is_zero()) {
      if (src_->localized()) {
        if (loc_coeff_ != Rational(1)) acc *= loc_coeff_.pow(m.last.to_long());
        HalfInt q = loc_sign_ == 1 ? m.last : -m.last;
        acc = tgt_->multiply(acc, tgt_->gen_pow(tgt_->localized_gen(), q));
      } else {
        acc = tgt_->multiply(acc, tgt_->power(images_.back(), m.last.to_long()));
      }
    }
    out += acc;
  }
  return out;
}

NCPoly GenMorphism::relation_defect(int j, int i) const {
  NCPoly lhs = tgt_->commutator(images_[static_cast<std::size_t>(j)],
                                images_[static_cast<std::size_t>(i)]);
  return lhs - apply(src_->rewrite(j, i));
}

bool GenMorphism::is_homomorphism(std::string* witness) const {
  for (int j = 1; j < static_cast<int>(src_->size()); ++j)
    for (int i = 0; i < j; ++i) {
      NCPoly d = relation_defect(j, i);
      if (!d.is_zero()) {
        if (witness)
          *witness = "images of (" + src_->name(j) + ", " + src_->name(i) +
                     ") break their relation by " + tgt_->str(d);
        return false;
      }
    }
  return true;
}

void GenMorphism::certify() const {
  std::string w;
  if (!is_homomorphism(&w)) throw RelationDefect(w);
}

GenMorphism identity_morphism(const Presentation& H) {
  std::vector<NCPoly> imgs;
  for (int i = 0; i < static_cast<int>(H.size()); ++i) imgs.push_back(H.gen(i));
  return GenMorphism(H, H, std::move(imgs));
}

GenMorphism compose(const GenMorphism& f, const GenMorphism& g) {
  if (!same_shape(g.target(), f.source()))
    throw std::invalid_argument("compose: inner target and outer source differ");
  std::vector<NCPoly> imgs;
  for (int i = 0; i < static_cast<int>(g.source().size()); ++i) imgs.push_back(f.apply(g.image(i)));
  return GenMorphism(g.source(), f.target(), std::move(imgs));
}

bool are_mutually_inverse(const GenMorphism& f, const GenMorphism& g) {
  if (!same_shape(f.target(), g.source()) || !same_shape(g.target(), f.source())) return false;
  return compose(g, f) == identity_morphism(f.source()) &&
         compose(f, g) == identity_morphism(g.source());
}

GenMorphism conjugate_involution(const GenMorphism& tau, const GenMorphism& phi,
                                 const GenMorphism& phi_inv) {
  if (!are_mutually_inverse(phi, phi_inv))
    throw std::invalid_argument("conjugate_involution: the claimed inverse is not one");
  if (!same_shape(tau.source(), phi.source()) || !same_shape(tau.target(), phi.source()))
    throw std::invalid_argument("conjugate_involution: tau must act on phi's source");
  GenMorphism out = compose(phi, compose(tau, phi_inv));
  out.certify();
  if (compose(out, out) != identity_morphism(phi.target()))
    throw RelationDefect("conjugated map does not square to the identity");
  return out;
}

std::vector<GenMorphism> group_closure(const std::vector<GenMorphism>& seeds, std::size_t bound) {
  if (seeds.empty()) throw std::invalid_argument("group_closure: no seeds");
  const Presentation& H = seeds.front().source();
  for (const GenMorphism& s : seeds) {
    if (!same_shape(s.source(), H) || !same_shape(s.target(), H))
      throw std::invalid_argument("group_closure: seeds must be endomorphisms of one algebra");
    s.certify();
  }

  std::vector<GenMorphism> out{identity_morphism(H)};
  auto known = [&out](const GenMorphism& m) {
    for (const GenMorphism& k : out)
      if (k == m) return true;
    return false;
  };
  auto push_checked = [&out, bound](GenMorphism m) {
    out.push_back(std::move(m));
    if (out.size() > bound)
      throw OrderBoundExceeded("composition closure passed " + std::to_string(bound) +
                               " elements");
  };
  for (const GenMorphism& s : seeds)
    if (!known(s)) push_checked(s);

  for (std::size_t fresh = 1; fresh != 0;) {
    fresh = 0;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        GenMorphism prod = compose(out[i], out[j]);
        if (!known(prod)) {
          push_checked(std::move(prod));
          ++fresh;
        }
      }
  }
  return out;
}

std::vector<NCPoly> fixed_subalgebra_basis(const Presentation& H,
                                           const std::vector<GenMorphism>& group, int degree) {
  if (group.empty()) throw std::invalid_argument("fixed_subalgebra_basis: empty group");
  for (const GenMorphism& g : group)
    for (const GenMorphism& h : group) {
      GenMorphism prod = compose(g, h);
      bool found = false;
      for (const GenMorphism& k : group)
        if (k == prod) {
          found = true;
          break;
        }
      if (!found)
        throw std::invalid_argument("fixed_subalgebra_basis: the set is not composition closed");
    }

  const Rational avg(1, static_cast<long>(group.size()));
  PolyEchelon ech;
  for (const Monomial& m : H.monomial_basis(degree)) {
    NCPoly sum;
    for (const GenMorphism& g : group) sum += g.apply(NCPoly::term(m, Rational(1)));
    sum *= avg;
    ech.insert(std::move(sum));
  }
  std::vector<NCPoly> rows = ech.sorted_rows();
  for (const NCPoly& r : rows)
    for (const GenMorphism& g : group)
      if (g.apply(r) != r) throw WalgError("averaged element moved by the group: " + H.str(r));
  return rows;
}

bool verify_weyl_pair(const Presentation& H, const NCPoly& a, const NCPoly& b,
                      const Rational& bracket) {
  return H.commutator(a, b) == H.scalar(bracket);
}

}  // namespace walg
