//! The named series and polynomial invariants of a plumbing tree.
//!
//! Everything here is assembled from the lattice and saturation layers:
//!
//! * [`z_series`] / [`z_h_series`] / [`z_reduced`] — the multivariable
//!   series whose coefficient at `n` is the product over vertices of
//!   [`vertex_factor_coefficient`](crate::series::vertex_factor_coefficient),
//!   its class components, and its restrictions to a vertex subset;
//! * [`z_relative_series`] / [`z_relative_reduced`] — the same construction
//!   with arrows counted into the vertex degrees;
//! * [`subset_chi_sum`] — the alternating sum over vertex subsets of the
//!   Riemann-Roch value of closure cycles; equals the series coefficient
//!   (a nontrivial identity, cross-checked rather than assumed);
//! * [`p_laufer`] — the counting series assembled from saturation runs
//!   `s(l' + E_I)` over all vertex subsets, defined for rational and
//!   minimally elliptic graphs;
//! * [`hilbert_coefficient`] / [`hilbert_round_trip`] — the Hilbert-series
//!   coefficients recovered from the counting series and the inverse
//!   direction;
//! * [`multiplicity_vector`] / [`monodromy_zeta`] — vanishing orders along
//!   the vertices for an arrow configuration, and the associated one-
//!   variable zeta function in factored form;
//! * [`superisolated_n_poly`] — the symmetric counting polynomial `N(t)`
//!   attached to a degree-`d` plane-curve datum with characteristic
//!   polynomial `Δ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::laufer;
use crate::lattice::{Cycle, GroupClass, Lattice};
use crate::rat;
use crate::series::{
    normalize_subset, vertex_factor_coefficient, FactoredRationalFunction, MultiSeries,
    ReducedSeries,
};

/// Vertex-count limit for the operations that enumerate all `2^s` vertex
/// subsets ([`p_laufer`], [`subset_chi_sum`], [`hilbert_round_trip`]).
const SUBSET_ENUMERATION_LIMIT: usize = 14;

/// Vertex degrees used by the series construction: tree degrees, or tree
/// degrees plus arrow counts for the relative variants.
fn degrees(lat: &Lattice, relative: bool) -> Vec<usize> {
    (0..lat.rank())
        .map(|j| lat.graph().valency(j, relative) as usize)
        .collect()
}

/// Variable ids in declaration order.
fn variable_ids(lat: &Lattice) -> Vec<String> {
    lat.graph().vertices().iter().map(|v| v.id.clone()).collect()
}

/// Preconditions of the relative series: at least one arrow overall, at
/// most one per vertex.
fn check_relative_arrows(lat: &Lattice) -> Result<()> {
    let g = lat.graph();
    if g.total_arrows() == 0 {
        return Err(Error::NoArrows);
    }
    for j in 0..g.len() {
        let count = g.arrow_count(j);
        if count > 1 {
            return Err(Error::ArrowRestriction {
                id: g.vertex(j).id.clone(),
                count,
            });
        }
    }
    Ok(())
}

/// Support enumeration over the simplex `Σ n_j ≤ cap`: vertices of degree
/// `≥ 3` contribute only `n ≤ degree − 2`, degree-2 vertices only `n = 0`,
/// the rest are free. Every visited point has a nonzero coefficient.
fn simplex_series(lat: &Lattice, degs: &[usize], cap: u32) -> Result<MultiSeries> {
    let s = lat.rank();
    let mut out = MultiSeries::new(variable_ids(lat), cap);
    let mut n = vec![0u32; s];

    fn rec(
        out: &mut MultiSeries,
        degs: &[usize],
        n: &mut Vec<u32>,
        j: usize,
        budget: u32,
        coeff: BigInt,
    ) -> Result<()> {
        if j == n.len() {
            return out.add_to(n.clone(), &coeff);
        }
        let top = match degs[j] {
            2 => 0,
            d if d >= 3 => (d as u32 - 2).min(budget),
            _ => budget,
        };
        for k in 0..=top {
            n[j] = k;
            let f = vertex_factor_coefficient(degs[j], k as u64);
            debug_assert!(!f.is_zero(), "support points have nonzero factors");
            rec(out, degs, n, j + 1, budget - k, &coeff * f)?;
        }
        n[j] = 0;
        Ok(())
    }

    rec(&mut out, degs, &mut n, 0, cap, BigInt::one())?;
    Ok(out)
}

/// The series whose coefficient at `n` is the product over vertices of the
/// degree factor coefficients — the Taylor expansion of
/// `Π_j (1 − x_j)^(δ_j − 2)` read off in the dual basis. The coefficient at
/// `n = 0` is always 1.
pub fn z_series(lat: &Lattice, cap: u32) -> Result<MultiSeries> {
    simplex_series(lat, &degrees(lat, false), cap)
}

/// The class component of [`z_series`]: only terms whose exponent cycle
/// lies in the class `h`.
pub fn z_h_series(lat: &Lattice, h: &GroupClass, cap: u32) -> Result<MultiSeries> {
    z_series(lat, cap)?.class_component(lat, h)
}

/// The relative variant of [`z_series`]: arrows add to the vertex degrees.
/// Requires at least one arrow, at most one per vertex.
pub fn z_relative_series(lat: &Lattice, cap: u32) -> Result<MultiSeries> {
    check_relative_arrows(lat)?;
    simplex_series(lat, &degrees(lat, true), cap)
}

/// Streaming construction of a restricted series: enumerates the support
/// directly with exponents projected to `u` on the fly, pruning every
/// branch whose projected exponent already exceeds the bound. Equivalent to
/// materializing the full series at the certified cap and projecting, but
/// without the intermediate object and with pruning in integer arithmetic.
fn reduced_engine(
    lat: &Lattice,
    degs: &[usize],
    u: &[usize],
    h: Option<&GroupClass>,
    bound: &BigRational,
) -> Result<ReducedSeries> {
    let u = normalize_subset(lat, u)?;
    if bound.is_negative() {
        return Err(Error::InvalidInput {
            msg: "series bound must be nonnegative".into(),
        });
    }

    let s = lat.rank();
    let d = lat.group_order();
    // Scaled integer view: coordinate i of E*_j times d, and the bound
    // times d, so that all pruning is machine-integer arithmetic.
    let scaled: Vec<Vec<i128>> = (0..s)
        .map(|j| {
            u.iter()
                .map(|&i| rat::rational_to_i128(&(lat.dual_cycle(j).coord(i) * &d)))
                .collect()
        })
        .collect();
    debug_assert!(scaled.iter().flatten().all(|&c| c > 0));
    let limit = rat::bigint_to_i128(&(bound * &d).floor().to_integer());

    // Class filtering: walk the class table alongside the exponent.
    let target = match h {
        Some(h) => {
            lat.check_class(h)?;
            let table = lat.class_table()?;
            Some((table, table.index_of(h).expect("class checked above")))
        }
        None => None,
    };
    let start_class = match target {
        Some((table, _)) => table.zero,
        None => 0,
    };

    struct Walk<'a> {
        degs: &'a [usize],
        scaled: &'a [Vec<i128>],
        limit: i128,
        table: Option<(&'a crate::lattice::ClassTable, usize)>,
        sums: BTreeMap<Vec<i128>, BigInt>,
    }

    fn rec(w: &mut Walk<'_>, j: usize, acc: &mut Vec<i128>, class: usize, coeff: i128) {
        if j == w.degs.len() {
            if let Some((_, want)) = w.table {
                if class != want {
                    return;
                }
            }
            let entry = w.sums.entry(acc.clone()).or_insert_with(BigInt::zero);
            *entry += coeff;
            return;
        }
        let top: Option<u64> = match w.degs[j] {
            2 => Some(0),
            deg if deg >= 3 => Some(deg as u64 - 2),
            _ => None,
        };
        let mut k = 0u64;
        let mut c = class;
        loop {
            if top.is_some_and(|t| k > t) {
                break;
            }
            if acc.iter().any(|&x| x > w.limit) {
                break;
            }
            let f = factor_i128(w.degs[j], k);
            rec(w, j + 1, acc, c, coeff * f);
            for (pos, step) in w.scaled[j].iter().enumerate() {
                acc[pos] += step;
            }
            if let Some((table, _)) = w.table {
                c = table.step[j][c] as usize;
            }
            k += 1;
        }
        for (pos, step) in w.scaled[j].iter().enumerate() {
            acc[pos] -= step * k as i128;
        }
    }

    fn factor_i128(deg: usize, n: u64) -> i128 {
        // Same values as vertex_factor_coefficient; tree degree sums keep
        // these small, so machine integers suffice.
        match deg {
            0 => n as i128 + 1,
            1 => 1,
            2 => i128::from(n == 0),
            d => {
                let m = (d - 2) as u64;
                if n > m {
                    0
                } else {
                    let b = rat::binomial(m, n)
                        .to_i128()
                        .expect("tree-degree binomial fits i128");
                    if n % 2 == 0 {
                        b
                    } else {
                        -b
                    }
                }
            }
        }
    }

    let mut walk = Walk {
        degs,
        scaled: &scaled,
        limit,
        table: target,
        sums: BTreeMap::new(),
    };
    let mut acc = vec![0i128; u.len()];
    rec(&mut walk, 0, &mut acc, start_class, 1);

    let variables: Vec<String> = u.iter().map(|&i| lat.graph().vertex(i).id.clone()).collect();
    let mut out = ReducedSeries::new(variables, bound.clone());
    for (key, coeff) in walk.sums {
        let e: Vec<BigRational> = key
            .iter()
            .map(|&num| BigRational::new(BigInt::from(num), d.clone()))
            .collect();
        out.add_to(e, coeff);
    }
    Ok(out)
}

/// The restriction of [`z_series`] (or of its `h` class component) to the
/// variables of `u`, complete on the box `[0, bound]^u`.
pub fn z_reduced(
    lat: &Lattice,
    u: &[usize],
    h: Option<&GroupClass>,
    bound: &BigRational,
) -> Result<ReducedSeries> {
    reduced_engine(lat, &degrees(lat, false), u, h, bound)
}

/// The restriction of [`z_relative_series`] (or of its `h` class
/// component) to the variables of `u`, complete on the box `[0, bound]^u`.
pub fn z_relative_reduced(
    lat: &Lattice,
    u: &[usize],
    h: Option<&GroupClass>,
    bound: &BigRational,
) -> Result<ReducedSeries> {
    check_relative_arrows(lat)?;
    reduced_engine(lat, &degrees(lat, true), u, h, bound)
}

/// Per-vertex contribution of the subset `I` to the pairing vector: adding
/// `E_I` to a cycle changes the pairing at `j` by `e_j` if `j ∈ I` plus the
/// number of neighbors of `j` inside `I`.
pub(crate) fn subset_pairing_contribution(lat: &Lattice, mask: u32) -> Vec<i128> {
    (0..lat.rank())
        .map(|j| {
            let mut c = 0i128;
            if mask & (1 << j) != 0 {
                c += lat.graph().vertex(j).euler as i128;
            }
            c += lat
                .graph()
                .neighbors(j)
                .iter()
                .filter(|&&nb| mask & (1 << nb) != 0)
                .count() as i128;
            c
        })
        .collect()
}

/// Riemann-Roch value of `E_I` (sum of base elements over the subset, each
/// once): the number of members minus the number of edges inside.
pub(crate) fn chi_of_subset(lat: &Lattice, mask: u32) -> i128 {
    let members = mask.count_ones() as i128;
    let edges = lat
        .graph()
        .edges()
        .iter()
        .filter(|&&(a, b)| mask & (1 << a) != 0 && mask & (1 << b) != 0)
        .count() as i128;
    members - edges
}

/// The alternating subset sum `Σ_I (−1)^(|I|+1) chi(l' + E_J)` over all
/// `2^s` vertex subsets `I`, where `J` is the vertex closure of `I` against
/// `l' = Σ n_j E*_j` and `E_J` the sum of base elements over `J`. This
/// equals the [`z_series`] coefficient at `n` — an identity checked by the
/// verification layer, not assumed here.
pub fn subset_chi_sum(lat: &Lattice, n: &[u32]) -> Result<BigInt> {
    let s = lat.rank();
    if n.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: n.len(),
        });
    }
    if s > SUBSET_ENUMERATION_LIMIT {
        return Err(Error::TooManyVertices {
            limit: SUBSET_ENUMERATION_LIMIT,
            got: s,
        });
    }
    let ascending: Vec<usize> = (0..s).collect();
    let mut total = 0i128;
    let mut q = vec![0i128; s];
    let mut in_set = vec![false; s];
    for mask in 0u32..(1 << s) {
        let contrib = subset_pairing_contribution(lat, mask);
        for j in 0..s {
            q[j] = contrib[j] - n[j] as i128;
            in_set[j] = mask & (1 << j) != 0;
        }
        laufer::closure_loop(lat, &mut q, &mut in_set, &ascending, |_, _| {});
        let mut closure_mask = 0u32;
        let mut n_sum = 0i128;
        for j in 0..s {
            if in_set[j] {
                closure_mask |= 1 << j;
                n_sum += n[j] as i128;
            }
        }
        let value = chi_of_subset(lat, closure_mask) + n_sum;
        if mask.count_ones() % 2 == 1 {
            total += value;
        } else {
            total -= value;
        }
    }
    Ok(BigInt::from(total))
}

/// The counting series assembled from saturation runs: its coefficient at
/// `n` (for the anti-nef cycle `l' = Σ n_j E*_j`) is
/// `p_g·[n = 0] + Σ_I (−1)^(|I|+1) chi(saturate(l' + E_I))` over all vertex
/// subsets `I`, with `p_g` the genus pinned down by the classification.
/// Defined for rational and minimally elliptic graphs only.
///
/// Internally the `chi` values are reduced to integer saturation-run data:
/// `chi(saturate(x)) = chi(x) + Σ_steps (1 − pairing)`, and the `chi(l')`
/// parts cancel across the alternating sum, so the whole computation runs
/// in machine integers with the run deltas memoized by their starting
/// pairing vector.
pub fn p_laufer(lat: &Lattice, cap: u32) -> Result<MultiSeries> {
    let s = lat.rank();
    if s > SUBSET_ENUMERATION_LIMIT {
        return Err(Error::TooManyVertices {
            limit: SUBSET_ENUMERATION_LIMIT,
            got: s,
        });
    }
    let class = laufer::classify(lat)?;
    let pg = class
        .geometric_genus()
        .ok_or_else(|| Error::UnsupportedClassification {
            kind: class.kind.label().to_string(),
        })?;

    let points = simplex_points(s, cap);

    let mut coeffs = vec![0i128; points.len()];
    let mut q = vec![0i128; s];
    let mut memo: HashMap<Vec<i32>, i64> = HashMap::new();
    for mask in 0u32..(1 << s) {
        let contrib = subset_pairing_contribution(lat, mask);
        let chi_e = chi_of_subset(lat, mask);
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        for (idx, point) in points.iter().enumerate() {
            for j in 0..s {
                q[j] = contrib[j] - point[j] as i128;
            }
            let key: Vec<i32> = q.iter().map(|&x| x as i32).collect();
            let delta = match memo.get(&key) {
                Some(&v) => v,
                None => {
                    let budget = laufer::step_budget(lat, &q);
                    let mut delta = 0i64;
                    laufer::run_loop(lat, &mut q, budget, |_, pairing| {
                        delta += 1 - pairing as i64;
                    })?;
                    memo.insert(key, delta);
                    delta
                }
            };
            let n_sum: i128 = mask_members(mask)
                .map(|j| point[j] as i128)
                .sum();
            coeffs[idx] += sign * (chi_e + n_sum + delta as i128);
        }
    }

    let mut out = MultiSeries::new(variable_ids(lat), cap);
    for (idx, point) in points.iter().enumerate() {
        let mut value = BigInt::from(coeffs[idx]);
        if point.iter().all(|&k| k == 0) {
            value += BigInt::from(pg);
        }
        out.add_to(point.clone(), &value)?;
    }
    debug_assert_eq!(
        out.coefficient(&vec![0; s]),
        BigInt::one(),
        "counting series starts at 1"
    );
    Ok(out)
}

/// Iterator over the vertex indices in a subset mask.
fn mask_members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&j| mask & (1 << j) != 0)
}

/// All exponent vectors `n ≥ 0` with `Σ n_j ≤ cap`, in lexicographic order.
pub(crate) fn simplex_points(s: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(points: &mut Vec<Vec<u32>>, n: &mut Vec<u32>, j: usize, budget: u32) {
        if j == n.len() {
            points.push(n.clone());
            return;
        }
        for k in 0..=budget {
            n[j] = k;
            rec(points, n, j + 1, budget - k);
        }
        n[j] = 0;
    }
    let mut points = Vec::new();
    let mut n = vec![0u32; s];
    rec(&mut points, &mut n, 0, cap);
    points
}

/// Checks that a series belongs to this lattice (same variables).
fn check_series_graph(lat: &Lattice, series: &MultiSeries) -> Result<()> {
    if series.rank() != lat.rank()
        || (0..lat.rank()).any(|j| lat.graph().vertex(j).id != series.variables()[j])
    {
        return Err(Error::InvalidInput {
            msg: "series variables do not match the graph".into(),
        });
    }
    Ok(())
}

/// A Hilbert-series coefficient recovered from the counting series `p`:
/// the sum of `p`-coefficients over all anti-nef `s` in the class of
/// `query` with `s − query` integral but not effective. The certified cap
/// of `p` must cover every such `s`; the call refuses (reporting the
/// required cap) when it does not. Queries with no positive coordinate
/// return 0.
pub fn hilbert_coefficient(lat: &Lattice, p: &MultiSeries, query: &Cycle) -> Result<BigInt> {
    check_series_graph(lat, p)?;
    lat.dual_coordinates(query)?; // membership: query must lie in L'

    // Certification: any contributing s has some coordinate below the
    // query's, and coordinate i of s is at least μ_i · Σ n_j; so Σ n_j is
    // capped by max_i(query_i / μ_i) over positive query coordinates.
    let mut required = 0u64;
    for i in 0..lat.rank() {
        let qi = query.coord(i);
        if qi.is_positive() {
            let mu = lat.min_dual_coordinate_over(&[i]);
            let need = rat::ceil_to_bigint(&(qi / mu)).to_u64().unwrap_or(u64::MAX);
            required = required.max(need);
        }
    }
    if (p.cap() as u64) < required {
        return Err(Error::InsufficientCap { required });
    }

    let mut total = BigInt::zero();
    for (n, c) in p.terms() {
        // a = s − query in plain coordinates; s contributes iff a is
        // integral (same class) and not effective (some coordinate < 0).
        let mut integral = true;
        let mut some_negative = false;
        for i in 0..lat.rank() {
            let si: BigRational = n
                .iter()
                .enumerate()
                .map(|(j, &k)| lat.dual_cycle(j).coord(i) * BigInt::from(k))
                .sum();
            let a = si - query.coord(i);
            if !rat::is_integer(&a) {
                integral = false;
                break;
            }
            if a.is_negative() {
                some_negative = true;
            }
        }
        if integral && some_negative {
            total += c;
        }
    }
    Ok(total)
}

/// The inverse direction: reassembles the counting-series coefficient at
/// `n` from Hilbert coefficients, as the alternating sum of
/// `hilbert_coefficient(p, l' + E_T)` over all vertex subsets `T` (with
/// `l' = Σ n_j E*_j`). Agreement with `p.coefficient(n)` is the round-trip
/// identity exercised by the verification layer.
pub fn hilbert_round_trip(lat: &Lattice, p: &MultiSeries, n: &[u32]) -> Result<BigInt> {
    let s = lat.rank();
    if n.len() != s {
        return Err(Error::DimensionMismatch {
            expected: s,
            got: n.len(),
        });
    }
    if s > SUBSET_ENUMERATION_LIMIT {
        return Err(Error::TooManyVertices {
            limit: SUBSET_ENUMERATION_LIMIT,
            got: s,
        });
    }
    let base: Vec<i64> = n.iter().map(|&k| k as i64).collect();
    let l = lat.cycle_from_dual_i64(&base);
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << s) {
        let coords: Vec<BigRational> = (0..s)
            .map(|i| {
                let mut c = l.coord(i).clone();
                if mask & (1 << i) != 0 {
                    c += BigRational::one();
                }
                c
            })
            .collect();
        let h = hilbert_coefficient(lat, p, &Cycle::from_rationals(coords))?;
        if mask.count_ones() % 2 == 1 {
            total += h;
        } else {
            total -= h;
        }
    }
    Ok(total)
}

/// Vanishing orders along the vertices determined by the arrow
/// configuration: coordinatewise `Σ_i a_i E*_i` with `a_i` the arrow count
/// at vertex `i`. Requires at least one arrow; a non-integral coordinate
/// means the arrows do not cut out an integral divisor and is a hard
/// error.
pub fn multiplicity_vector(lat: &Lattice) -> Result<Vec<BigInt>> {
    let g = lat.graph();
    if g.total_arrows() == 0 {
        return Err(Error::NoArrows);
    }
    let mut m = vec![BigRational::zero(); lat.rank()];
    for i in 0..lat.rank() {
        let a = g.arrow_count(i);
        if a == 0 {
            continue;
        }
        for (pos, item) in m.iter_mut().enumerate() {
            *item += lat.dual_cycle(i).coord(pos) * BigInt::from(a);
        }
    }
    let mut out = Vec::with_capacity(lat.rank());
    for (i, value) in m.iter().enumerate() {
        if !rat::is_integer(value) {
            return Err(Error::NonIntegralMultiplicity {
                id: g.vertex(i).id.clone(),
                value: rat::format_rational(value),
            });
        }
        out.push(value.to_integer());
    }
    Ok(out)
}

/// The one-variable zeta function of the arrow configuration:
/// `Π_j (1 − t^(m_j))^(δ^C_j − 2)` with `m` the multiplicity vector and
/// `δ^C` the arrow-inclusive degrees. Factors with exponent zero drop out;
/// repeated `m` values merge. Returned in factored form; expand as needed.
pub fn monodromy_zeta(lat: &Lattice) -> Result<FactoredRationalFunction> {
    let m = multiplicity_vector(lat)?;
    let mut merged: BTreeMap<BigInt, i64> = BTreeMap::new();
    for j in 0..lat.rank() {
        let power = lat.graph().valency(j, true) as i64 - 2;
        if power != 0 {
            *merged.entry(m[j].clone()).or_insert(0) += power;
        }
    }
    let mut factors: Vec<(Vec<BigRational>, i64)> = merged
        .into_iter()
        .filter(|(_, power)| *power != 0)
        .map(|(mj, power)| (vec![BigRational::from_integer(mj)], power))
        .collect();
    factors.sort_by(|a, b| b.0.cmp(&a.0)); // largest exponent first
    FactoredRationalFunction::new(
        vec!["t".into()],
        1,
        vec![BigRational::zero()],
        factors,
    )
}

/// The symmetric counting polynomial of a degree-`d` plane-curve datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NPolyResult {
    /// Coefficients of `N(t)`, constant term first, trailing zeros
    /// trimmed. Empty when `N = 0`.
    pub coeffs: Vec<BigInt>,
    /// `N(1)`, the sum of the coefficients.
    pub n_at_one: BigInt,
    /// Symmetry `N_k = N_(d−3−k)` held on the whole checked window (always
    /// true on success; violations are errors).
    pub symmetric: bool,
}

impl NPolyResult {
    /// JSON form: coefficient strings, the value at 1, the symmetry flag.
    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "n_at_one": self.n_at_one.to_string(),
            "symmetric": self.symmetric,
        })
    }
}

/// The counting polynomial `N(t)` of a degree-`d` curve datum with
/// characteristic polynomial `Δ` (integer coefficients, constant term
/// first). Computed without complex arithmetic: the degree-`d`
/// root-of-unity average of `Δ(u)/(1 − u)²` keeps exactly the exponents
/// divisible by `d`, so `N_k` is `c_(kd) − b_k`, where `c` expands
/// `Δ(u)/(1 − u)²` and `b` expands `(1 − t^d)/(1 − t)³`. The result must
/// vanish at 0 and beyond degree `d − 3` and be symmetric; any violation
/// signals inconsistent input and is an error.
pub fn superisolated_n_poly(d: u32, delta: &[BigInt]) -> Result<NPolyResult> {
    if d < 2 {
        return Err(Error::InvalidInput {
            msg: format!("curve degree must be at least 2, got {d}"),
        });
    }
    let mut delta = delta.to_vec();
    while delta.last().is_some_and(|c| c.is_zero()) {
        delta.pop();
    }
    if delta.is_empty() {
        return Err(Error::InvalidInput {
            msg: "characteristic polynomial must be nonzero".into(),
        });
    }
    let deg_delta = delta.len() as u64 - 1;
    let d64 = d as u64;

    // Window: enough to see the whole symmetric range and the vanishing
    // tail after Δ is fully absorbed.
    let window = (2 * d64 + 2).max(deg_delta.div_ceil(d64) + d64);

    // c_m = coefficient of u^m in Δ(u)/(1−u)² = Σ_i Δ_i (m − i + 1).
    let c = |m: u64| -> BigInt {
        delta
            .iter()
            .enumerate()
            .filter(|&(i, _)| (i as u64) <= m)
            .map(|(i, coeff)| coeff * BigInt::from(m - i as u64 + 1))
            .sum()
    };
    // b_k = coefficient of t^k in (1−t^d)/(1−t)³.
    let b = |k: u64| -> BigInt {
        let mut v = rat::binomial(k + 2, 2);
        if k >= d64 {
            v -= rat::binomial(k - d64 + 2, 2);
        }
        v
    };

    let n_vals: Vec<BigInt> = (0..=window).map(|k| c(k * d64) - b(k)).collect();

    if !n_vals[0].is_zero() {
        return Err(Error::SymmetryViolation {
            msg: format!("constant term is {}, expected 0", n_vals[0]),
        });
    }
    // Degree bound: nothing beyond d − 3.
    let top = d64.saturating_sub(3);
    for (k, v) in n_vals.iter().enumerate().skip(top as usize + 1) {
        if !v.is_zero() {
            return Err(Error::SymmetryViolation {
                msg: format!(
                    "coefficient {v} at degree {k} exceeds the degree bound {top}"
                ),
            });
        }
    }
    // Symmetry on the surviving range.
    if d64 >= 3 {
        for k in 0..=top {
            let mirror = top - k;
            if n_vals[k as usize] != n_vals[mirror as usize] {
                return Err(Error::SymmetryViolation {
                    msg: format!(
                        "coefficient at degree {k} is {}, at degree {mirror} is {}",
                        n_vals[k as usize], n_vals[mirror as usize]
                    ),
                });
            }
        }
    }

    let mut coeffs: Vec<BigInt> = if d64 >= 3 {
        n_vals[..=top as usize].to_vec()
    } else {
        Vec::new()
    };
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let n_at_one = coeffs.iter().sum();
    Ok(NPolyResult {
        coeffs,
        n_at_one,
        symmetric: true,
    })
}
