//! Truncated exact-coefficient series.
//!
//! Two series shapes cover everything the crate computes:
//!
//! * [`MultiSeries`] — one variable per vertex, indexed by the dual
//!   multiplicity vector `n` (the exponent in the dual basis), enumerated
//!   over the simplex `Σ n_j ≤ cap`. Coefficients are exact big integers;
//!   the actual exponent vector is the rational cycle `Σ n_j E*_j`,
//!   recoverable on demand.
//! * [`ReducedSeries`] — variables restricted to a vertex subset, indexed
//!   by rational exponent vectors inside the box `[0, B]^U` for a certified
//!   bound `B`. Everything inside the box is complete; nothing outside it
//!   is stored.
//!
//! [`FactoredRationalFunction`] represents products `± t^m · Π (1 − t^a)^k`
//! and expands them exactly into a [`ReducedSeries`], which is how closed
//! forms are compared against computed series.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{GroupClass, Lattice};
use crate::rat;

/// Coefficient of `x^n` in the expansion of `(1 − x)^(delta − 2)` at the
/// origin — the factor a vertex of degree `delta` contributes to the series
/// product. Exact in all regimes: geometric-style growth for `delta < 2`,
/// the constant `1` for `delta = 2`, a signed binomial (vanishing for
/// `n > delta − 2`) beyond that.
pub fn vertex_factor_coefficient(delta: usize, n: u64) -> BigInt {
    match delta {
        0 | 1 => {
            // (1 − x)^(−r) with r = 2 − delta ∈ {1, 2}.
            let r = (2 - delta) as u64;
            rat::binomial(n + r - 1, r - 1)
        }
        2 => {
            if n == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }
        d => {
            let m = (d - 2) as u64;
            if n > m {
                BigInt::zero()
            } else if n % 2 == 0 {
                rat::binomial(m, n)
            } else {
                -rat::binomial(m, n)
            }
        }
    }
}

/// A truncated series in one variable per vertex, with exact integer
/// coefficients, supported on dual multiplicity vectors `n ≥ 0` with
/// `Σ n_j ≤ cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSeries {
    variables: Vec<String>,
    cap: u32,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiSeries {
    /// An empty series over the given variables, certified on the simplex
    /// `Σ n_j ≤ cap`.
    pub fn new(variables: Vec<String>, cap: u32) -> Self {
        MultiSeries {
            variables,
            cap,
            terms: BTreeMap::new(),
        }
    }

    /// Variable ids, in vertex declaration order.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// The simplex bound: coefficients with `Σ n_j ≤ cap` are complete.
    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Number of variables.
    pub fn rank(&self) -> usize {
        self.variables.len()
    }

    /// True iff `n` lies in the certified region of this series.
    pub fn covers(&self, n: &[u32]) -> bool {
        n.len() == self.rank() && n.iter().map(|&k| k as u64).sum::<u64>() <= self.cap as u64
    }

    /// Sets the coefficient at `n` (dropping it when zero). Errors when `n`
    /// falls outside the certified region.
    pub fn insert(&mut self, n: Vec<u32>, coeff: BigInt) -> Result<()> {
        if !self.covers(&n) {
            return Err(Error::InvalidInput {
                msg: format!("exponent {n:?} outside the certified region"),
            });
        }
        if coeff.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, coeff);
        }
        Ok(())
    }

    /// Adds `delta` to the coefficient at `n`, dropping the term if the sum
    /// is zero. Errors when `n` falls outside the certified region.
    pub fn add_to(&mut self, n: Vec<u32>, delta: &BigInt) -> Result<()> {
        if delta.is_zero() {
            return Ok(());
        }
        let current = self.coefficient(&n);
        self.insert(n, current + delta)
    }

    /// The coefficient at `n` (zero when no term is stored).
    pub fn coefficient(&self, n: &[u32]) -> BigInt {
        self.terms.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All nonzero terms, in lexicographic `n` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The component of this series supported on one class of the
    /// discriminant group: keeps exactly the terms `n` whose exponent cycle
    /// `Σ n_j E*_j` has class `h`. Cap and variables are preserved.
    pub fn class_component(&self, lat: &Lattice, h: &GroupClass) -> Result<MultiSeries> {
        self.check_lattice(lat)?;
        lat.check_class(h)?;
        let table = lat.class_table()?;
        let target = table.index_of(h).expect("class checked above");
        let mut out = MultiSeries::new(self.variables.clone(), self.cap);
        for (n, c) in &self.terms {
            if table.index_of_dual(n) == target {
                out.terms.insert(n.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// Restriction to the variables of the vertex subset `u`: the exponent
    /// of each term is projected onto the `u` coordinates and coefficients
    /// of collapsing terms are summed. The result is complete on the box
    /// `[0, bound]^u`; this requires the cap to reach `bound / μ`, where `μ`
    /// is the smallest `u`-coordinate of any dual base element, and the
    /// call refuses (reporting the required cap) when it does not.
    pub fn project(&self, lat: &Lattice, u: &[usize], bound: &BigRational) -> Result<ReducedSeries> {
        self.check_lattice(lat)?;
        let u = normalize_subset(lat, u)?;
        if bound.is_negative() {
            return Err(Error::InvalidInput {
                msg: "projection bound must be nonnegative".into(),
            });
        }
        let mu = lat.min_dual_coordinate_over(&u);
        let required = rat::ceil_to_bigint(&(bound / &mu))
            .to_u64()
            .unwrap_or(u64::MAX);
        if (self.cap as u64) < required {
            return Err(Error::InsufficientCap { required });
        }

        let variables: Vec<String> = u.iter().map(|&i| lat.graph().vertex(i).id.clone()).collect();
        let mut out = ReducedSeries::new(variables, bound.clone());
        for (n, c) in &self.terms {
            let e: Vec<BigRational> = u
                .iter()
                .map(|&i| {
                    n.iter()
                        .enumerate()
                        .map(|(j, &k)| lat.dual_cycle(j).coord(i) * BigInt::from(k))
                        .sum()
                })
                .collect();
            if e.iter().all(|x| x <= bound) {
                out.add_to(e, c.clone());
            }
        }
        Ok(out)
    }

    /// JSON form: variables, cap, and the terms in exponent order, each
    /// with its dual multiplicity vector `n`, rational exponent, and
    /// coefficient.
    pub fn to_json(&self, lat: &Lattice) -> Result<Value> {
        self.check_lattice(lat)?;
        let mut rows: Vec<(Vec<BigRational>, &Vec<u32>, &BigInt)> = self
            .terms
            .iter()
            .map(|(n, c)| {
                let e: Vec<BigRational> = (0..self.rank())
                    .map(|i| {
                        n.iter()
                            .enumerate()
                            .map(|(j, &k)| lat.dual_cycle(j).coord(i) * BigInt::from(k))
                            .sum()
                    })
                    .collect();
                (e, n, c)
            })
            .collect();
        rows.sort();
        Ok(json!({
            "variables": self.variables,
            "cap": self.cap,
            "terms": rows
                .iter()
                .map(|(e, n, c)| {
                    json!({
                        "n": n,
                        "exponent": e.iter().map(rat::format_rational).collect::<Vec<_>>(),
                        "coeff": c.to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        }))
    }

    fn check_lattice(&self, lat: &Lattice) -> Result<()> {
        if lat.rank() != self.rank()
            || (0..lat.rank()).any(|j| lat.graph().vertex(j).id != self.variables[j])
        {
            return Err(Error::InvalidInput {
                msg: "series variables do not match the graph".into(),
            });
        }
        Ok(())
    }
}

/// Validates and sorts a vertex subset; errors when empty or out of range.
pub(crate) fn normalize_subset(lat: &Lattice, u: &[usize]) -> Result<Vec<usize>> {
    if u.is_empty() {
        return Err(Error::InvalidInput {
            msg: "vertex subset must be nonempty".into(),
        });
    }
    if let Some(&bad) = u.iter().find(|&&i| i >= lat.rank()) {
        return Err(Error::InvalidInput {
            msg: format!("vertex index {bad} out of range"),
        });
    }
    let mut u = u.to_vec();
    u.sort_unstable();
    u.dedup();
    Ok(u)
}

/// A truncated series in the variables of a vertex subset, indexed by
/// rational exponent vectors, complete on the box `[0, B]^U` for the
/// certified bound `B`. No exponent outside the box is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedSeries {
    variables: Vec<String>,
    certified_bound: BigRational,
    terms: BTreeMap<Vec<BigRational>, BigInt>,
}

impl ReducedSeries {
    /// An empty series over the given variables, certified on
    /// `[0, bound]^U`.
    pub fn new(variables: Vec<String>, bound: BigRational) -> Self {
        ReducedSeries {
            variables,
            certified_bound: bound,
            terms: BTreeMap::new(),
        }
    }

    /// Variable ids.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// The box bound: coefficients with every coordinate `≤ B` are
    /// complete.
    pub fn certified_bound(&self) -> &BigRational {
        &self.certified_bound
    }

    /// Adds `delta` at exponent `e`, silently dropping exponents outside
    /// the certified box and terms that cancel to zero.
    pub fn add_to(&mut self, e: Vec<BigRational>, delta: BigInt) {
        debug_assert_eq!(e.len(), self.variables.len(), "exponent length");
        debug_assert!(e.iter().all(|x| !x.is_negative()), "negative exponent");
        if delta.is_zero() || e.iter().any(|x| x > &self.certified_bound) {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += delta;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// The coefficient at `e` (zero when no term is stored).
    pub fn coefficient(&self, e: &[BigRational]) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// All nonzero terms, in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<BigRational>, &BigInt)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Termwise difference on the common certified box. Both series must be
    /// over the same variables; the result is certified to the smaller of
    /// the two bounds and re-pruned to it.
    pub fn minus(&self, other: &ReducedSeries) -> Result<ReducedSeries> {
        if self.variables != other.variables {
            return Err(Error::VariableMismatch {
                left: self.variables.clone(),
                right: other.variables.clone(),
            });
        }
        let bound = self.certified_bound.clone().min(other.certified_bound.clone());
        let mut out = ReducedSeries::new(self.variables.clone(), bound);
        for (e, c) in &self.terms {
            out.add_to(e.clone(), c.clone());
        }
        for (e, c) in &other.terms {
            out.add_to(e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// JSON form: variables, certified bound, and terms in exponent order.
    pub fn to_json(&self) -> Value {
        json!({
            "variables": self.variables,
            "certified_bound": rat::format_rational(&self.certified_bound),
            "terms": self
                .terms
                .iter()
                .map(|(e, c)| {
                    json!({
                        "exponent": e.iter().map(rat::format_rational).collect::<Vec<_>>(),
                        "coeff": c.to_string(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// A product `sign · t^monomial · Π_k (1 − t^{a_k})^{m_k}` over a fixed
/// variable set, with rational exponent vectors and integer (possibly
/// negative) multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredRationalFunction {
    variables: Vec<String>,
    sign: i8,
    monomial: Vec<BigRational>,
    factors: Vec<(Vec<BigRational>, i64)>,
}

impl FactoredRationalFunction {
    /// Validates and builds a factored form. Multiplicities must be
    /// nonzero; every exponent must be nonnegative with at least one
    /// positive coordinate; factors with negative multiplicity must be
    /// positive in every coordinate (otherwise the geometric expansion does
    /// not truncate on a box).
    pub fn new(
        variables: Vec<String>,
        sign: i8,
        monomial: Vec<BigRational>,
        factors: Vec<(Vec<BigRational>, i64)>,
    ) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidFactor {
                msg: format!("sign must be 1 or -1, got {sign}"),
            });
        }
        if monomial.len() != variables.len() {
            return Err(Error::InvalidFactor {
                msg: "monomial exponent length does not match the variables".into(),
            });
        }
        if monomial.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidFactor {
                msg: "monomial exponent must be nonnegative".into(),
            });
        }
        for (a, m) in &factors {
            if *m == 0 {
                return Err(Error::InvalidFactor {
                    msg: "factor multiplicity must be nonzero".into(),
                });
            }
            if a.len() != variables.len() {
                return Err(Error::InvalidFactor {
                    msg: "factor exponent length does not match the variables".into(),
                });
            }
            if a.iter().any(|x| x.is_negative()) || a.iter().all(|x| x.is_zero()) {
                return Err(Error::InvalidFactor {
                    msg: "factor exponent must be nonnegative and nonzero".into(),
                });
            }
            if *m < 0 && a.iter().any(|x| !x.is_positive()) {
                return Err(Error::InvalidFactor {
                    msg: "denominator factor exponent must be positive in every coordinate".into(),
                });
            }
        }
        Ok(FactoredRationalFunction {
            variables,
            sign,
            monomial,
            factors,
        })
    }

    /// Variable ids.
    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    /// Exact Taylor expansion, complete on the box `[0, bound]^U`. Factors
    /// with positive multiplicity multiply in as finite polynomials; those
    /// with negative multiplicity as truncated geometric series. All
    /// exponent increments are nonnegative, so terms leaving the box are
    /// pruned as soon as they appear.
    pub fn expand(&self, bound: &BigRational) -> Result<ReducedSeries> {
        if bound.is_negative() {
            return Err(Error::InvalidInput {
                msg: "expansion bound must be nonnegative".into(),
            });
        }
        let inside = |e: &[BigRational]| e.iter().all(|x| x <= bound);

        let mut acc: BTreeMap<Vec<BigRational>, BigInt> = BTreeMap::new();
        if inside(&self.monomial) {
            acc.insert(self.monomial.clone(), BigInt::from(self.sign));
        }
        for (a, m) in &self.factors {
            if acc.is_empty() {
                break;
            }
            // Terms (coefficient of t^{k a}) of this factor, up to the box.
            let mut factor_terms: Vec<(Vec<BigRational>, BigInt)> = Vec::new();
            let mut k = 0u64;
            loop {
                if *m > 0 && k > *m as u64 {
                    break;
                }
                let e: Vec<BigRational> = a.iter().map(|x| x * BigInt::from(k)).collect();
                if k > 0 && !inside(&e) {
                    break;
                }
                let coeff = if *m > 0 {
                    // (1 − t^a)^m: signed binomial.
                    let c = rat::binomial(*m as u64, k);
                    if k % 2 == 0 {
                        c
                    } else {
                        -c
                    }
                } else {
                    // (1 − t^a)^m = Σ_k C(k + r − 1, r − 1) t^{k a}.
                    let r = m.unsigned_abs();
                    rat::binomial(k + r - 1, r - 1)
                };
                factor_terms.push((e, coeff));
                k += 1;
            }

            let mut next: BTreeMap<Vec<BigRational>, BigInt> = BTreeMap::new();
            for (e1, c1) in &acc {
                for (e2, c2) in &factor_terms {
                    let e: Vec<BigRational> =
                        e1.iter().zip(e2).map(|(x, y)| x + y).collect();
                    if !inside(&e) {
                        continue;
                    }
                    let entry = next.entry(e).or_insert_with(BigInt::zero);
                    *entry += c1 * c2;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }

        let mut out = ReducedSeries::new(self.variables.clone(), bound.clone());
        for (e, c) in acc {
            out.add_to(e, c);
        }
        Ok(out)
    }

    /// Compact rendering, e.g. `(1-t^6)/((1-t^3)*(1-t^2)^2)`.
    pub fn render(&self) -> String {
        let monomial = |e: &[BigRational]| -> Option<String> {
            if e.iter().all(|x| x.is_zero()) {
                return None;
            }
            if e.len() == 1 {
                if e[0].is_one() {
                    return Some("t".into());
                }
                return Some(format!("t^{}", rat::format_rational(&e[0])));
            }
            Some(format!(
                "t^({})",
                e.iter().map(rat::format_rational).collect::<Vec<_>>().join(",")
            ))
        };
        let factor = |a: &[BigRational], power: u64| -> String {
            let base = format!("(1-{})", monomial(a).expect("factor exponent is nonzero"));
            if power == 1 {
                base
            } else {
                format!("{base}^{power}")
            }
        };

        let mut num: Vec<String> = Vec::new();
        let mut den: Vec<String> = Vec::new();
        if self.sign < 0 {
            num.push("-1".into());
        }
        if let Some(m) = monomial(&self.monomial) {
            num.push(m);
        }
        for (a, m) in &self.factors {
            if *m > 0 {
                num.push(factor(a, *m as u64));
            } else {
                den.push(factor(a, m.unsigned_abs()));
            }
        }
        let num_str = if num.is_empty() {
            "1".to_string()
        } else {
            num.join("*")
        };
        if den.is_empty() {
            num_str
        } else if den.len() == 1 {
            format!("{num_str}/{}", den[0])
        } else {
            format!("{num_str}/({})", den.join("*"))
        }
    }

    /// JSON form: sign, monomial, and the factor list.
    pub fn to_json(&self) -> Value {
        json!({
            "variables": self.variables,
            "sign": self.sign,
            "monomial": self.monomial.iter().map(rat::format_rational).collect::<Vec<_>>(),
            "factors": self
                .factors
                .iter()
                .map(|(a, m)| {
                    json!({
                        "exponent": a.iter().map(rat::format_rational).collect::<Vec<_>>(),
                        "multiplicity": m,
                    })
                })
                .collect::<Vec<_>>(),
            "rendered": self.render(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ResolutionGraph;

    fn lattice(text: &str) -> Lattice {
        Lattice::new(ResolutionGraph::parse(text).unwrap()).unwrap()
    }

    fn q(s: &str) -> BigRational {
        rat::parse_rational(s).unwrap()
    }

    fn qs(list: &[&str]) -> Vec<BigRational> {
        list.iter().map(|s| q(s)).collect()
    }

    #[test]
    fn vertex_factor_coefficients_in_all_regimes() {
        // Degree 0: (1 − x)^(−2) = Σ (k + 1) x^k.
        for k in 0..6u64 {
            assert_eq!(vertex_factor_coefficient(0, k), BigInt::from(k + 1));
            assert_eq!(vertex_factor_coefficient(1, k), BigInt::one());
        }
        // Degree 2: the constant 1.
        assert_eq!(vertex_factor_coefficient(2, 0), BigInt::one());
        assert_eq!(vertex_factor_coefficient(2, 1), BigInt::zero());
        // Degree 3: (1 − x)^1.
        assert_eq!(vertex_factor_coefficient(3, 0), BigInt::one());
        assert_eq!(vertex_factor_coefficient(3, 1), BigInt::from(-1));
        assert_eq!(vertex_factor_coefficient(3, 2), BigInt::zero());
        // Degree 5: (1 − x)^3 = 1 − 3x + 3x² − x³.
        let expect = [1i64, -3, 3, -1, 0, 0];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(vertex_factor_coefficient(5, k as u64), BigInt::from(c));
        }
    }

    #[test]
    fn geometric_series_expansion() {
        let f = FactoredRationalFunction::new(
            vec!["t".into()],
            1,
            qs(&["0"]),
            vec![(qs(&["1"]), -1)],
        )
        .unwrap();
        let s = f.expand(&q("3")).unwrap();
        assert_eq!(s.term_count(), 4);
        for k in 0..=3 {
            assert_eq!(s.coefficient(&qs(&[&k.to_string()])), BigInt::one());
        }
    }

    #[test]
    fn cusp_quotient_expansion() {
        // (1 − t^6) / ((1 − t^3)(1 − t^2)(1 − t)) up to t^6.
        let f = FactoredRationalFunction::new(
            vec!["t".into()],
            1,
            qs(&["0"]),
            vec![
                (qs(&["6"]), 1),
                (qs(&["3"]), -1),
                (qs(&["2"]), -1),
                (qs(&["1"]), -1),
            ],
        )
        .unwrap();
        let s = f.expand(&q("6")).unwrap();
        let expect = [1i64, 1, 2, 3, 4, 5, 6];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(s.coefficient(&qs(&[&k.to_string()])), BigInt::from(c));
        }
        assert_eq!(s.term_count(), 7);
        assert_eq!(f.render(), "(1-t^6)/((1-t^3)*(1-t^2)*(1-t))");
    }

    #[test]
    fn polynomial_over_cube_expansion() {
        // (1 − t^5) / (1 − t)^3 = Σ C(n+2, 2) t^n for n < 5.
        let f = FactoredRationalFunction::new(
            vec!["t".into()],
            1,
            qs(&["0"]),
            vec![(qs(&["5"]), 1), (qs(&["1"]), -3)],
        )
        .unwrap();
        let s = f.expand(&q("3")).unwrap();
        let expect = [1i64, 3, 6, 10];
        for (k, &c) in expect.iter().enumerate() {
            assert_eq!(s.coefficient(&qs(&[&k.to_string()])), BigInt::from(c));
        }
    }

    #[test]
    fn fractional_exponents_expand_on_the_box() {
        let f = FactoredRationalFunction::new(
            vec!["v".into()],
            1,
            qs(&["0"]),
            vec![(qs(&["1/3"]), -1)],
        )
        .unwrap();
        let s = f.expand(&q("1")).unwrap();
        assert_eq!(s.term_count(), 4);
        assert_eq!(s.coefficient(&qs(&["2/3"])), BigInt::one());
    }

    #[test]
    fn factored_form_validation() {
        let bad_sign = FactoredRationalFunction::new(vec!["t".into()], 2, qs(&["0"]), vec![]);
        assert!(matches!(bad_sign, Err(Error::InvalidFactor { .. })));
        let zero_mult =
            FactoredRationalFunction::new(vec!["t".into()], 1, qs(&["0"]), vec![(qs(&["1"]), 0)]);
        assert!(matches!(zero_mult, Err(Error::InvalidFactor { .. })));
        let neg_monomial =
            FactoredRationalFunction::new(vec!["t".into()], 1, qs(&["-1"]), vec![]);
        assert!(matches!(neg_monomial, Err(Error::InvalidFactor { .. })));
        // A denominator factor must be positive in every coordinate.
        let partial = FactoredRationalFunction::new(
            vec!["x".into(), "y".into()],
            1,
            qs(&["0", "0"]),
            vec![(qs(&["1", "0"]), -1)],
        );
        assert!(matches!(partial, Err(Error::InvalidFactor { .. })));
        // The same exponent is fine in the numerator.
        let ok = FactoredRationalFunction::new(
            vec!["x".into(), "y".into()],
            1,
            qs(&["0", "0"]),
            vec![(qs(&["1", "0"]), 1)],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn multi_series_region_checks() {
        let mut s = MultiSeries::new(vec!["a".into(), "b".into()], 3);
        s.insert(vec![1, 2], BigInt::from(5)).unwrap();
        assert!(s.insert(vec![2, 2], BigInt::one()).is_err());
        assert!(s.insert(vec![1], BigInt::one()).is_err());
        assert_eq!(s.coefficient(&[1, 2]), BigInt::from(5));
        s.add_to(vec![1, 2], &BigInt::from(-5)).unwrap();
        assert_eq!(s.term_count(), 0);
    }

    #[test]
    fn class_components_partition_the_series() {
        let lat = lattice("vertex v -3\n");
        let mut s = MultiSeries::new(vec!["v".into()], 6);
        for n in 0..=6u32 {
            s.insert(vec![n], BigInt::from(n + 1)).unwrap();
        }
        let classes = lat.enumerate_classes().unwrap();
        assert_eq!(classes.len(), 3);
        let mut total = 0usize;
        for h in &classes {
            let part = s.class_component(&lat, h).unwrap();
            total += part.term_count();
            // Class with representative 1/3 keeps n ≡ 1 mod 3.
            if h.representative()[0] == q("1/3") {
                let kept: Vec<u32> = part.terms().map(|(n, _)| n[0]).collect();
                assert_eq!(kept, vec![1, 4]);
            }
        }
        assert_eq!(total, s.term_count());
    }

    #[test]
    fn projection_certifies_and_refuses() {
        let lat = lattice("vertex v -3\n");
        let mut s = MultiSeries::new(vec!["v".into()], 6);
        for n in 0..=6u32 {
            s.insert(vec![n], BigInt::one()).unwrap();
        }
        // μ = 1/3: bound 1 needs cap 3 ≤ 6.
        let r = s.project(&lat, &[0], &q("1")).unwrap();
        assert_eq!(r.term_count(), 4);
        assert_eq!(r.coefficient(&qs(&["1/3"])), BigInt::one());
        // Bound 3 needs cap 9 > 6.
        match s.project(&lat, &[0], &q("3")) {
            Err(Error::InsufficientCap { required }) => assert_eq!(required, 9),
            other => panic!("expected InsufficientCap, got {other:?}"),
        }
    }

    #[test]
    fn projection_collapses_terms() {
        // Two vertices; project onto the first. Chain a(-2) - b(-2):
        // duals are E*_a = (1, 1/2)... use dual coordinates directly:
        // exponent of (n_a, n_b) at vertex a is n_a (E*_a)_a + n_b (E*_b)_a.
        let lat = lattice("vertex a -2\nvertex b -2\nedge a b\n");
        let mut s = MultiSeries::new(vec!["a".into(), "b".into()], 4);
        s.insert(vec![0, 2], BigInt::from(3)).unwrap(); // exponent at a: 2·1/3... computed below
        s.insert(vec![1, 0], BigInt::from(4)).unwrap();
        // For this chain det = 3, (E*_a)_a = 2/3, (E*_b)_a = 1/3.
        assert_eq!(lat.dual_cycle(0).coord(0), &q("2/3"));
        assert_eq!(lat.dual_cycle(1).coord(0), &q("1/3"));
        // Both terms project to exponent 2/3 at a.
        let r = s.project(&lat, &[0], &q("1")).unwrap();
        assert_eq!(r.coefficient(&qs(&["2/3"])), BigInt::from(7));
    }

    #[test]
    fn reduced_difference_on_common_window() {
        let mut a = ReducedSeries::new(vec!["t".into()], q("3"));
        a.add_to(qs(&["0"]), BigInt::one());
        a.add_to(qs(&["1"]), BigInt::from(2));
        let mut b = ReducedSeries::new(vec!["t".into()], q("2"));
        b.add_to(qs(&["0"]), BigInt::one());
        b.add_to(qs(&["1"]), BigInt::one());
        let d = a.minus(&b).unwrap();
        assert_eq!(d.certified_bound(), &q("2"));
        assert_eq!(d.term_count(), 1);
        assert_eq!(d.coefficient(&qs(&["1"])), BigInt::one());

        let zero = a.minus(&a).unwrap();
        assert_eq!(zero.term_count(), 0);

        let other = ReducedSeries::new(vec!["u".into()], q("3"));
        assert!(matches!(
            a.minus(&other),
            Err(Error::VariableMismatch { .. })
        ));
    }

    #[test]
    fn json_shapes_are_deterministic() {
        let lat = lattice("vertex v -3\n");
        let mut s = MultiSeries::new(vec!["v".into()], 3);
        s.insert(vec![2], BigInt::from(7)).unwrap();
        s.insert(vec![0], BigInt::one()).unwrap();
        let j = s.to_json(&lat).unwrap();
        let terms = j["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[0]["exponent"][0], "0");
        assert_eq!(terms[1]["exponent"][0], "2/3");
        assert_eq!(terms[1]["coeff"], "7");

        let mut r = ReducedSeries::new(vec!["v".into()], q("2"));
        r.add_to(qs(&["1/2"]), BigInt::from(-3));
        let j = r.to_json();
        assert_eq!(j["certified_bound"], "2");
        assert_eq!(j["terms"][0]["exponent"][0], "1/2");
        assert_eq!(j["terms"][0]["coeff"], "-3");
    }
}
