#ifndef SAP_FORMULA_HPP
#define SAP_FORMULA_HPP

#include <functional>
#include <vector>

#include "sap/point.hpp"

namespace sap {

// Relation of a polynomial atom against zero.
enum class Rel { GE, LE, EQ };

// Negation-free boolean combination of polynomial sign atoms. All
// atoms of one formula range over the same variable tuple for the
// evaluation helpers to make sense.
class Formula {
  public:
    enum class Kind { True, False, Atom, And, Or };

    static Formula always_true();
    static Formula always_false();
    static Formula atom(Poly p, Rel r);
    static Formula conj(std::vector<Formula> parts);
    static Formula disj(std::vector<Formula> parts);

    Kind kind() const { return kind_; }
    const Poly& poly() const;
    Rel rel() const;
    const std::vector<Formula>& children() const { return kids_; }

    // Largest variable count among the atoms; 0 when there are none.
    uint32_t nvars() const;

    bool holds_at(const APoint& p) const;
    // Evaluates with an externally supplied sign for each atom poly.
    bool holds(const std::function<int(const Poly&)>& sign_of) const;

    // All atom polynomials, deduplicated, in first-appearance order.
    std::vector<Poly> polys() const;

    // Substitutes rational values for the first k variables and
    // renumbers the remaining ones down by k. Atoms whose polynomial
    // becomes constant collapse to True/False.
    Formula specialize_prefix(size_t k, const std::vector<Q>& vals) const;

    // Renumbers every variable i to i + shift, widening to width vars.
    Formula embedded(uint32_t shift, uint32_t width) const;

  private:
    Formula(Kind k) : kind_(k) {}

    Kind kind_;
    Poly poly_ = Poly::constant(0, Q(0));  // Atom only
    Rel rel_ = Rel::GE;                    // Atom only
    std::vector<Formula> kids_;            // And / Or only
};

// Whether the sign s satisfies the relation.
bool rel_holds(Rel r, int s);

}  // namespace sap

#endif
