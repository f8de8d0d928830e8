//! Greedy computation sequences on the lattice and the classification
//! derived from them.
//!
//! The core loop is the classical one: starting from a cycle, repeatedly add
//! the base element of a vertex whose pairing with the running cycle is
//! positive. On a negative-definite form this terminates, and the limit is
//! independent of the choices; this module always picks the first qualifying
//! vertex in declaration order, so traces are deterministic.
//!
//! Built on that loop:
//!
//! * [`saturate`] — the smallest anti-nef cycle above a given dual-lattice
//!   element (add only, never subtract);
//! * [`vertex_closure`] — the smallest vertex set containing a seed with no
//!   outside vertex pairing positively against the cycle plus the set's sum
//!   of base elements;
//! * [`fundamental_cycle`] — the smallest strictly positive anti-nef
//!   integral cycle, reached from the all-ones cycle;
//! * [`classify`] — `Rational` / `MinimallyElliptic` / `Elliptic` / `Other`
//!   from the Riemann-Roch value of the fundamental cycle, with the
//!   minimally elliptic case confirmed by checking that every proper
//!   connected induced subgraph is rational.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::lattice::{Cycle, Lattice};
use crate::rat;

/// Vertex-count limit for the exhaustive induced-subgraph sweep inside
/// [`classify`] (only reached when the fundamental cycle has `chi = 0`).
const SUBGRAPH_SWEEP_LIMIT: usize = 20;

/// Defensive step budget for the subgraph sweeps. Termination is guaranteed
/// on negative-definite forms; this only guards against internal errors.
const SUBGRAPH_STEP_BUDGET: u64 = 10_000_000;

/// One step of a computation sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// The running cycle at the moment the step was taken, before the
    /// addition.
    pub before: Cycle,
    /// Index of the vertex whose base element was added.
    pub vertex: usize,
    /// Id of that vertex.
    pub id: String,
    /// Pairing of `before` with that base element; always strictly positive.
    pub pairing: i64,
}

/// Limit of a computation sequence together with its trace.
#[derive(Debug, Clone)]
pub struct SequenceOutcome {
    /// The resulting cycle (start value plus everything added).
    pub cycle: Cycle,
    /// Total integral cycle added on top of the start value, indexed by
    /// vertex.
    pub added: Vec<BigInt>,
    /// The loop steps in execution order.
    pub steps: Vec<TraceStep>,
}

impl SequenceOutcome {
    /// The pairing values along the trace.
    pub fn pairings(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.pairing).collect()
    }
}

/// Limit of a vertex-set closure together with its trace.
#[derive(Debug, Clone)]
pub struct ClosureOutcome {
    /// Sorted indices of the closure members, seed included.
    pub members: Vec<usize>,
    /// The start cycle plus the sum of base elements over the members.
    pub cycle: Cycle,
    /// The steps that added non-seed members, in execution order.
    pub steps: Vec<TraceStep>,
}

impl ClosureOutcome {
    /// The pairing values along the trace.
    pub fn pairings(&self) -> Vec<i64> {
        self.steps.iter().map(|s| s.pairing).collect()
    }
}

/// Headline classification of a negative-definite tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// `chi` of the fundamental cycle is 1.
    Rational,
    /// `chi` of the fundamental cycle is 0 and every proper connected
    /// induced subgraph is rational.
    MinimallyElliptic,
    /// `chi` of the fundamental cycle is 0 but some proper connected
    /// induced subgraph is not rational.
    Elliptic,
    /// `chi` of the fundamental cycle is negative.
    Other,
}

impl Kind {
    /// Stable label used in CLI output.
    pub fn label(&self) -> &'static str {
        match self {
            Kind::Rational => "Rational",
            Kind::MinimallyElliptic => "MinimallyElliptic",
            Kind::Elliptic => "Elliptic",
            Kind::Other => "Other",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Classification data, computed once per lattice and cached.
#[derive(Debug, Clone)]
pub struct Classification {
    /// The headline class.
    pub kind: Kind,
    /// Coordinates of the fundamental cycle.
    pub zmin: Vec<BigInt>,
    /// Riemann-Roch value of the fundamental cycle.
    pub chi: BigInt,
    /// Pairing values along the greedy sequence from the all-ones cycle to
    /// the fundamental cycle. All 1 on a rational graph; exactly one 2 (the
    /// rest 1) on a minimally elliptic one — forced by `chi`, whatever the
    /// order of additions.
    pub increments: Vec<i64>,
}

impl Classification {
    /// Geometric genus pinned down by the classification: 0 for rational,
    /// 1 for minimally elliptic, unknown otherwise.
    pub fn geometric_genus(&self) -> Option<u64> {
        match self.kind {
            Kind::Rational => Some(0),
            Kind::MinimallyElliptic => Some(1),
            Kind::Elliptic | Kind::Other => None,
        }
    }
}

/// Integral pairings `(x, E_j)` for all `j`, as machine integers. Errors if
/// any pairing is fractional, i.e. if `x` is outside the dual lattice.
pub(crate) fn integral_pairings(lat: &Lattice, x: &Cycle) -> Result<Vec<i128>> {
    if x.len() != lat.rank() {
        return Err(Error::DimensionMismatch {
            expected: lat.rank(),
            got: x.len(),
        });
    }
    let n = lat.dual_coordinates(x)?;
    Ok(n.iter().map(|v| -rat::bigint_to_i128(v)).collect())
}

/// Step budget for a run starting with pairings `q0`: generous enough for
/// any terminating run, small enough to catch internal errors.
pub(crate) fn step_budget(lat: &Lattice, q0: &[i128]) -> u64 {
    let d = lat.group_order().to_u64().unwrap_or(u64::MAX);
    let s = lat.rank() as u64;
    let maxn = q0
        .iter()
        .map(|v| v.unsigned_abs())
        .max()
        .unwrap_or(0)
        .min(u64::MAX as u128) as u64;
    10u64
        .saturating_mul(d)
        .saturating_mul(s)
        .saturating_mul(maxn.saturating_add(1))
}

/// Applies one base-element addition at `j` to the pairing vector `q`.
#[inline]
fn bump_pairings(lat: &Lattice, q: &mut [i128], j: usize) {
    q[j] += lat.graph().vertex(j).euler as i128;
    for &nb in lat.graph().neighbors(j) {
        q[nb] += 1;
    }
}

/// The greedy positive-pairing loop over all vertices. `q` holds the
/// pairings of the running cycle with every base element and is updated in
/// place. Calls `on_step` with `(vertex, pairing)` before each addition and
/// returns the step count.
pub(crate) fn run_loop<F: FnMut(usize, i128)>(
    lat: &Lattice,
    q: &mut [i128],
    cap: u64,
    mut on_step: F,
) -> Result<u64> {
    let mut count = 0u64;
    'sweep: loop {
        for j in 0..q.len() {
            if q[j] > 0 {
                if count == cap {
                    return Err(Error::IterationLimit { limit: cap });
                }
                on_step(j, q[j]);
                bump_pairings(lat, q, j);
                count += 1;
                continue 'sweep;
            }
        }
        return Ok(count);
    }
}

/// The closure loop: repeatedly marks the first vertex (in `priority`
/// order) outside `in_set` whose pairing is positive, updating `q` in
/// place. Takes at most one step per vertex. `on_step` sees `(vertex,
/// pairing)` before each marking.
pub(crate) fn closure_loop<F: FnMut(usize, i128)>(
    lat: &Lattice,
    q: &mut [i128],
    in_set: &mut [bool],
    priority: &[usize],
    mut on_step: F,
) {
    'sweep: loop {
        for &j in priority {
            if !in_set[j] && q[j] > 0 {
                on_step(j, q[j]);
                in_set[j] = true;
                bump_pairings(lat, q, j);
                continue 'sweep;
            }
        }
        break;
    }
}

/// Runs the loop from `start`, recording the full trace.
fn run_traced(
    lat: &Lattice,
    start: &Cycle,
    q: &mut [i128],
    cap: u64,
) -> Result<(Vec<BigInt>, Vec<TraceStep>)> {
    let mut added = vec![BigInt::from(0); lat.rank()];
    let mut current = start.clone();
    let mut steps = Vec::new();
    run_loop(lat, q, cap, |j, pairing| {
        steps.push(TraceStep {
            before: current.clone(),
            vertex: j,
            id: lat.graph().vertex(j).id.clone(),
            pairing: i64::try_from(pairing).expect("pairing magnitude fits i64"),
        });
        added[j] += 1;
        let mut cs = current.coords().to_vec();
        cs[j] += BigRational::one();
        current = Cycle::from_rationals(cs);
    })?;
    Ok((added, steps))
}

fn cycle_of_bigints(coords: &[BigInt]) -> Cycle {
    Cycle::from_rationals(
        coords
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect(),
    )
}

/// The saturation of `x`: the unique smallest cycle of the form `x + z`
/// with `z >= 0` integral whose pairing with every base element is
/// nonpositive. `x` must lie in the dual lattice.
pub fn saturate(lat: &Lattice, x: &Cycle) -> Result<SequenceOutcome> {
    let mut q = integral_pairings(lat, x)?;
    let cap = step_budget(lat, &q);
    let (added, steps) = run_traced(lat, x, &mut q, cap)?;
    let cycle = x.plus(&cycle_of_bigints(&added));
    Ok(SequenceOutcome {
        cycle,
        added,
        steps,
    })
}

/// The vertex closure of `seed` against `x`: the unique smallest vertex set
/// containing `seed` such that no outside vertex has positive pairing with
/// `x` plus the sum of base elements over the set. Each vertex enters the
/// set at most once, so the loop takes at most `rank` steps; the traced
/// cycle before each step is that running sum. The seed may be empty.
pub fn vertex_closure(lat: &Lattice, x: &Cycle, seed: &[usize]) -> Result<ClosureOutcome> {
    let ascending: Vec<usize> = (0..lat.rank()).collect();
    closure_with_priority(lat, x, seed, &ascending)
}

/// [`vertex_closure`] with an explicit candidate scan order. The resulting
/// member set is the same for every order (only the trace varies); tests
/// exercise this with reversed priority.
pub(crate) fn closure_with_priority(
    lat: &Lattice,
    x: &Cycle,
    seed: &[usize],
    priority: &[usize],
) -> Result<ClosureOutcome> {
    if let Some(&bad) = seed.iter().find(|&&j| j >= lat.rank()) {
        return Err(Error::InvalidInput {
            msg: format!("vertex index {bad} out of range"),
        });
    }
    let mut q = integral_pairings(lat, x)?;
    let mut in_set = vec![false; lat.rank()];
    let mut current = x.coords().to_vec();
    for &j in seed {
        if !in_set[j] {
            in_set[j] = true;
            bump_pairings(lat, &mut q, j);
            current[j] += BigRational::one();
        }
    }
    let mut steps = Vec::new();
    closure_loop(lat, &mut q, &mut in_set, priority, |j, pairing| {
        steps.push(TraceStep {
            before: Cycle::from_rationals(current.clone()),
            vertex: j,
            id: lat.graph().vertex(j).id.clone(),
            pairing: i64::try_from(pairing).expect("pairing magnitude fits i64"),
        });
        current[j] += BigRational::one();
    });
    let members: Vec<usize> = (0..lat.rank()).filter(|&j| in_set[j]).collect();
    Ok(ClosureOutcome {
        members,
        cycle: Cycle::from_rationals(current),
        steps,
    })
}

/// The fundamental cycle: the smallest integral anti-nef cycle that is
/// `>= 1` on every vertex, reached greedily from the all-ones cycle. The
/// trace pairings are the classification increments.
pub fn fundamental_cycle(lat: &Lattice) -> Result<SequenceOutcome> {
    let ones = Cycle::ones(lat.rank());
    saturate(lat, &ones)
}

/// Classifies the graph, computing (and caching) the fundamental cycle, its
/// Riemann-Roch value and the trace increments.
pub fn classify(lat: &Lattice) -> Result<Classification> {
    if let Some(c) = lat.classification_cache().get() {
        return Ok(c.clone());
    }
    let computed = compute_classification(lat)?;
    Ok(lat.classification_cache().get_or_init(|| computed).clone())
}

/// The pairing values along the greedy all-ones-to-fundamental sequence.
/// Only defined for rational and minimally elliptic graphs: there the
/// multiset of values is an invariant (all 1, resp. all 1 with exactly one
/// 2), whatever order qualifying vertices are picked in. Because only the
/// multiset is order-independent, the values are presented in canonical
/// nondecreasing order; the scan-order trace itself is available from the
/// fundamental-cycle steps.
pub fn fundamental_increments(lat: &Lattice) -> Result<Vec<i64>> {
    let class = classify(lat)?;
    match class.kind {
        Kind::Rational | Kind::MinimallyElliptic => {
            let mut inc = class.increments;
            inc.sort_unstable();
            Ok(inc)
        }
        other => Err(Error::UnsupportedClassification {
            kind: other.label().to_string(),
        }),
    }
}

fn compute_classification(lat: &Lattice) -> Result<Classification> {
    let fc = fundamental_cycle(lat)?;
    let chi_rat = lat.chi(&fc.cycle);
    debug_assert!(rat::is_integer(&chi_rat), "chi is integral on integral cycles");
    let chi = chi_rat.to_integer();

    let zmin: Vec<BigInt> = fc
        .cycle
        .coords()
        .iter()
        .map(|c| c.to_integer())
        .collect();
    let increments = fc.pairings();

    let kind = if chi == BigInt::from(1) {
        Kind::Rational
    } else if chi.is_negative() {
        Kind::Other
    } else if proper_connected_subgraphs_rational(lat)? {
        Kind::MinimallyElliptic
    } else {
        Kind::Elliptic
    };

    Ok(Classification {
        kind,
        zmin,
        chi,
        increments,
    })
}

/// Checks that every proper connected induced subgraph is rational, by
/// running the fundamental-cycle loop on each vertex-subset mask.
fn proper_connected_subgraphs_rational(lat: &Lattice) -> Result<bool> {
    let s = lat.rank();
    if s > SUBGRAPH_SWEEP_LIMIT {
        return Err(Error::TooManyVertices {
            limit: SUBGRAPH_SWEEP_LIMIT,
            got: s,
        });
    }
    if s == 1 {
        return Ok(true); // no proper nonempty subgraphs
    }
    let adj: Vec<u32> = (0..s)
        .map(|j| {
            lat.graph()
                .neighbors(j)
                .iter()
                .fold(0u32, |m, &nb| m | 1 << nb)
        })
        .collect();
    let eulers: Vec<i128> = (0..s)
        .map(|j| lat.graph().vertex(j).euler as i128)
        .collect();
    let full = (1u32 << s) - 1;
    for mask in 1..full {
        if mask_connected(mask, &adj) && !mask_rational(mask, &adj, &eulers)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connectivity of the induced subgraph on `mask`, by bitwise closure.
fn mask_connected(mask: u32, adj: &[u32]) -> bool {
    let mut reach = 1u32 << mask.trailing_zeros();
    loop {
        let mut next = reach;
        let mut bits = reach;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[j] & mask;
        }
        if next == reach {
            return reach == mask;
        }
        reach = next;
    }
}

/// Rationality of the induced subgraph on `mask`: compute its fundamental
/// cycle greedily from all ones and test `chi = 1` against the subgraph's
/// own canonical class.
fn mask_rational(mask: u32, adj: &[u32], eulers: &[i128]) -> Result<bool> {
    let s = eulers.len();
    let verts: Vec<usize> = (0..s).filter(|&j| mask & (1 << j) != 0).collect();

    // z = all ones on the subset; q_j = (z, E_j) within the subgraph.
    let mut z = vec![0i128; s];
    let mut q = vec![0i128; s];
    for &j in &verts {
        z[j] = 1;
        q[j] = eulers[j] + (adj[j] & mask).count_ones() as i128;
    }

    let mut count = 0u64;
    'sweep: loop {
        for &j in &verts {
            if q[j] > 0 {
                if count == SUBGRAPH_STEP_BUDGET {
                    return Err(Error::IterationLimit {
                        limit: SUBGRAPH_STEP_BUDGET,
                    });
                }
                z[j] += 1;
                q[j] += eulers[j];
                let mut bits = adj[j] & mask;
                while bits != 0 {
                    let nb = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    q[nb] += 1;
                }
                count += 1;
                continue 'sweep;
            }
        }
        break;
    }

    // chi(z) = -((z, z) + (z, K))/2 with (E_j, K) = -e_j - 2 in the subgraph.
    let mut self_pair = 0i128;
    let mut k_pair = 0i128;
    for &j in &verts {
        self_pair += eulers[j] * z[j] * z[j];
        let mut bits = adj[j] & mask;
        while bits != 0 {
            let nb = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self_pair += z[j] * z[nb]; // each edge counted from both ends
        }
        k_pair += z[j] * (-eulers[j] - 2);
    }
    let twice_chi = -(self_pair + k_pair);
    debug_assert!(twice_chi % 2 == 0, "chi is integral on integral cycles");
    Ok(twice_chi == 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ResolutionGraph;

    fn lattice(text: &str) -> Lattice {
        Lattice::new(ResolutionGraph::parse(text).unwrap()).unwrap()
    }

    const A3: &str = "vertex a -2\nvertex m -2\nvertex c -2\nedge a m\nedge m c\n";
    const D4: &str =
        "vertex c -2\nvertex l1 -2\nvertex l2 -2\nvertex l3 -2\nedge c l1\nedge c l2\nedge c l3\n";
    // Star with a -1 center and arms of weights -7, -2, -3.
    const STAR_E12: &str = "vertex a -7\nvertex c -1\nvertex b -2\nvertex d -3\n\
                            edge c a\nedge c b\nedge c d\n";
    // Star with a -1 center and four -7 legs: chi of the fundamental cycle
    // is -2.
    const STAR_NEG: &str = "vertex c -1\nvertex l1 -7\nvertex l2 -7\nvertex l3 -7\nvertex l4 -7\n\
                            edge c l1\nedge c l2\nedge c l3\nedge c l4\n";

    #[test]
    fn chain_is_already_saturated_from_ones() {
        let lat = lattice(A3);
        let fc = fundamental_cycle(&lat).unwrap();
        assert_eq!(fc.cycle, Cycle::integral(&[1, 1, 1]));
        assert!(fc.steps.is_empty());
        let class = classify(&lat).unwrap();
        assert_eq!(class.kind, Kind::Rational);
        assert_eq!(class.chi, BigInt::from(1));
        assert!(class.increments.is_empty());
        assert_eq!(class.geometric_genus(), Some(0));
    }

    #[test]
    fn four_star_fundamental_cycle() {
        let lat = lattice(D4);
        let fc = fundamental_cycle(&lat).unwrap();
        assert_eq!(fc.cycle, Cycle::integral(&[2, 1, 1, 1]));
        assert_eq!(fc.pairings(), vec![1]);
        assert_eq!(fc.steps[0].id, "c");
        assert_eq!(fc.steps[0].before, Cycle::integral(&[1, 1, 1, 1]));
        assert_eq!(classify(&lat).unwrap().kind, Kind::Rational);
    }

    #[test]
    fn weighted_star_is_minimally_elliptic() {
        let lat = lattice(STAR_E12);
        let class = classify(&lat).unwrap();
        assert_eq!(class.kind, Kind::MinimallyElliptic);
        assert_eq!(class.chi, BigInt::from(0));
        assert_eq!(
            class.zmin,
            vec![1, 6, 3, 2].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
        // The single pairing-2 step is forced to come first here: at the
        // all-ones cycle the center is the only vertex with positive
        // pairing, and its value is 2.
        assert_eq!(class.increments, vec![2, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(class.geometric_genus(), Some(1));
        // Canonical presentation: ones first, the single 2 last.
        assert_eq!(
            fundamental_increments(&lat).unwrap(),
            vec![1, 1, 1, 1, 1, 1, 1, 2]
        );
    }

    #[test]
    fn negative_chi_star_is_other_and_gated() {
        let lat = lattice(STAR_NEG);
        let class = classify(&lat).unwrap();
        assert_eq!(class.kind, Kind::Other);
        assert_eq!(class.chi, BigInt::from(-2));
        assert_eq!(class.increments, vec![3, 2, 1]);
        assert_eq!(class.geometric_genus(), None);
        assert!(matches!(
            fundamental_increments(&lat),
            Err(Error::UnsupportedClassification { .. })
        ));
    }

    #[test]
    fn saturation_moves_into_the_anti_nef_cone() {
        let lat = lattice(A3);
        // Already anti-nef: nothing to do.
        let sat = saturate(&lat, lat.dual_cycle(0)).unwrap();
        assert_eq!(&sat.cycle, lat.dual_cycle(0));
        assert!(sat.steps.is_empty());

        // The negative of a dual base element saturates to another one.
        let neg = lat.dual_cycle(0).scaled(&crate::rat::parse_rational("-1").unwrap());
        let sat = saturate(&lat, &neg).unwrap();
        assert_eq!(&sat.cycle, lat.dual_cycle(2));
        assert_eq!(sat.pairings(), vec![1, 1, 1]);
        assert_eq!(sat.steps[0].before, neg);

        // Saturation result is anti-nef and differs by an effective
        // integral cycle.
        let m = lat.membership(&sat.cycle);
        assert!(m.in_s_prime);
        assert!(sat.added.iter().all(|a| !a.is_negative()));
    }

    #[test]
    fn saturation_rejects_cycles_outside_the_dual_lattice() {
        let lat = lattice(A3);
        let x = Cycle::from_rationals(vec![
            crate::rat::parse_rational("1/3").unwrap(),
            crate::rat::parse_rational("0").unwrap(),
            crate::rat::parse_rational("0").unwrap(),
        ]);
        assert!(matches!(
            saturate(&lat, &x),
            Err(Error::NotInDualLattice { .. })
        ));
        let short = Cycle::integral(&[1]);
        assert!(matches!(
            saturate(&lat, &short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn closure_of_middle_vertex_pulls_in_the_ends() {
        let lat = lattice(A3);
        let zero = Cycle::zeros(3);
        let out = vertex_closure(&lat, &zero, &[1]).unwrap();
        assert_eq!(out.members, vec![0, 1, 2]);
        assert_eq!(out.cycle, Cycle::integral(&[1, 1, 1]));
        assert_eq!(out.pairings(), vec![1, 1]);
        // First step: the seed sum is E_middle and vertex a qualifies.
        assert_eq!(out.steps[0].before, Cycle::integral(&[0, 1, 0]));
        assert_eq!(out.steps[0].id, "a");
        assert_eq!(out.steps[1].before, Cycle::integral(&[1, 1, 0]));
        assert_eq!(out.steps[1].id, "c");
    }

    #[test]
    fn closure_of_empty_seed_against_anti_nef_cycle_is_empty() {
        let lat = lattice(A3);
        let out = vertex_closure(&lat, lat.dual_cycle(0), &[]).unwrap();
        assert!(out.members.is_empty());
        assert!(out.steps.is_empty());
        assert_eq!(&out.cycle, lat.dual_cycle(0));
    }

    #[test]
    fn closure_on_a_single_vertex_is_the_seed() {
        let lat = lattice("vertex v -3\n");
        let out = vertex_closure(&lat, &Cycle::zeros(1), &[0]).unwrap();
        assert_eq!(out.members, vec![0]);
        assert!(out.steps.is_empty());
        assert_eq!(out.cycle, Cycle::integral(&[1]));
    }

    #[test]
    fn closure_members_do_not_depend_on_scan_order() {
        let lat = lattice(D4);
        let zero = Cycle::zeros(4);
        let forward = vertex_closure(&lat, &zero, &[0]).unwrap();
        let backward = closure_with_priority(&lat, &zero, &[0], &[3, 2, 1, 0]).unwrap();
        assert_eq!(forward.members, vec![0, 1, 2, 3]);
        assert_eq!(forward.members, backward.members);
        assert_eq!(forward.cycle, backward.cycle);
        // Traces differ in order but carry the same pairing multiset.
        let mut f = forward.pairings();
        let mut b = backward.pairings();
        f.sort_unstable();
        b.sort_unstable();
        assert_eq!(f, b);
    }

    #[test]
    fn closure_rejects_bad_seeds_and_duplicates_are_harmless() {
        let lat = lattice(A3);
        let zero = Cycle::zeros(3);
        assert!(matches!(
            vertex_closure(&lat, &zero, &[9]),
            Err(Error::InvalidInput { .. })
        ));
        let once = vertex_closure(&lat, &zero, &[1]).unwrap();
        let twice = vertex_closure(&lat, &zero, &[1, 1]).unwrap();
        assert_eq!(once.members, twice.members);
        assert_eq!(once.cycle, twice.cycle);
    }

    #[test]
    fn classification_is_cached() {
        let lat = lattice(D4);
        let first = classify(&lat).unwrap();
        let second = classify(&lat).unwrap();
        assert_eq!(first.kind, second.kind);
        assert_eq!(first.zmin, second.zmin);
    }
}
