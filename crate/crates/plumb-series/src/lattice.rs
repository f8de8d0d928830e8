//! The intersection lattice of a plumbing tree and its dual.
//!
//! For a negative-definite tree with intersection matrix `I`, this module
//! provides:
//!
//! * [`Cycle`] — exact rational divisors supported on the vertices;
//! * [`Lattice`] — the form itself with cached inverse data: the dual base
//!   elements (`dual_cycle`), the canonical cycle `K`, Riemann-Roch
//!   `chi(x) = -(x, x + K)/2`, and the discriminant group (cokernel of `I`)
//!   with its Smith normal form factors;
//! * [`GroupClass`] — a discriminant group element, represented by the
//!   fractional parts of any cycle in the class (a point of `[0,1)^s`);
//! * dual coordinates: `n_j = -(x, E_j)`, integral exactly on the dual
//!   lattice, non-negative exactly on the anti-nef cone.
//!
//! Construction rejects graphs whose form is not negative definite. All
//! arithmetic is exact; the inverse matrix, dual base, canonical cycle and
//! Smith factors are computed once per graph and cached immutably.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::ResolutionGraph;
use crate::linalg;
use crate::rat;

/// Largest discriminant group the class machinery will enumerate.
const GROUP_ENUMERATION_LIMIT: u64 = 1_000_000;

/// An exact rational cycle (divisor) in the vertex base. Coordinates follow
/// the graph's declaration order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    coords: Vec<BigRational>,
}

impl Cycle {
    /// Cycle from explicit rational coordinates.
    pub fn from_rationals(coords: Vec<BigRational>) -> Self {
        Cycle { coords }
    }

    /// Integral cycle from machine integers.
    pub fn integral(coords: &[i64]) -> Self {
        Cycle {
            coords: coords
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// The zero cycle in `len` coordinates.
    pub fn zeros(len: usize) -> Self {
        Cycle {
            coords: vec![BigRational::zero(); len],
        }
    }

    /// The all-ones cycle (sum of all base elements).
    pub fn ones(len: usize) -> Self {
        Cycle {
            coords: vec![BigRational::one(); len],
        }
    }

    /// Borrow the coordinates.
    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    /// Single coordinate.
    pub fn coord(&self, j: usize) -> &BigRational {
        &self.coords[j]
    }

    /// Number of coordinates.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// True iff there are no coordinates (never for cycles built on graphs).
    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// All coordinates integral?
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(rat::is_integer)
    }

    /// All coordinates `>= 0`?
    pub fn is_effective(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    /// Componentwise `self >= other`?
    pub fn dominates(&self, other: &Cycle) -> bool {
        self.coords.len() == other.coords.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| a >= b)
    }

    /// Componentwise sum.
    pub fn plus(&self, other: &Cycle) -> Cycle {
        assert_eq!(self.len(), other.len(), "cycle length mismatch");
        Cycle {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference.
    pub fn minus(&self, other: &Cycle) -> Cycle {
        assert_eq!(self.len(), other.len(), "cycle length mismatch");
        Cycle {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scaled(&self, factor: &BigRational) -> Cycle {
        Cycle {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coordinates as canonical rational strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(rat::format_rational).collect()
    }

    /// Parses a comma-separated list of rationals.
    pub fn parse_list(text: &str) -> Result<Cycle> {
        let coords = text
            .split(',')
            .map(|tok| rat::parse_rational(tok))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidCycleSpec { msg: e.to_string() })?;
        Ok(Cycle { coords })
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// An element of the discriminant group, as the fractional-part vector of
/// any representative cycle (each entry in `[0, 1)`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupClass {
    frac: Vec<BigRational>,
}

impl GroupClass {
    /// The representative point in the unit cube.
    pub fn representative(&self) -> &[BigRational] {
        &self.frac
    }

    /// The zero class in `len` coordinates.
    pub fn zero(len: usize) -> Self {
        GroupClass {
            frac: vec![BigRational::zero(); len],
        }
    }

    /// True iff this is the zero class.
    pub fn is_zero(&self) -> bool {
        self.frac.iter().all(|c| c.is_zero())
    }

    /// Group addition (componentwise fractional part of the sum).
    pub fn add(&self, other: &GroupClass) -> GroupClass {
        assert_eq!(self.frac.len(), other.frac.len(), "class length mismatch");
        GroupClass {
            frac: self
                .frac
                .iter()
                .zip(&other.frac)
                .map(|(a, b)| rat::fractional_part(&(a + b)))
                .collect(),
        }
    }

    /// Canonical rational strings of the representative.
    pub fn to_strings(&self) -> Vec<String> {
        self.frac.iter().map(rat::format_rational).collect()
    }
}

impl fmt::Display for GroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}

/// Which sublattices and cones a cycle belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Membership {
    /// Integral coordinates (the base lattice).
    pub in_l: bool,
    /// Integral dual coordinates (the dual lattice).
    pub in_l_prime: bool,
    /// All coordinates non-negative.
    pub effective: bool,
    /// Dual-lattice member with all dual coordinates non-negative (the
    /// anti-nef cone).
    pub in_s_prime: bool,
    /// Anti-nef and integral.
    pub in_s: bool,
}

/// Isomorphism type of the discriminant group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    /// Group order `|det I|`.
    pub order: BigInt,
    /// Nontrivial invariant factors in divisibility order (empty for the
    /// trivial group).
    pub invariant_factors: Vec<BigInt>,
}

/// Enumerated discriminant group with fast add-a-generator steps, built on
/// demand and cached.
pub(crate) struct ClassTable {
    /// All classes, sorted by representative; `reps[zero]` is the zero class.
    pub reps: Vec<GroupClass>,
    /// Index of the zero class in `reps`.
    pub zero: usize,
    /// `step[j][c]` = index of `reps[c] + [dual_cycle(j)]`.
    pub step: Vec<Vec<u32>>,
    index: BTreeMap<GroupClass, usize>,
}

impl ClassTable {
    /// Index of a class, if it belongs to this group.
    pub fn index_of(&self, class: &GroupClass) -> Option<usize> {
        self.index.get(class).copied()
    }

    /// Class index of a dual-coordinate vector `n` (the class of
    /// `sum_j n_j dual_cycle(j)`).
    pub fn index_of_dual(&self, n: &[u32]) -> usize {
        let mut c = self.zero;
        for (j, &k) in n.iter().enumerate() {
            for _ in 0..k {
                c = self.step[j][c] as usize;
            }
        }
        c
    }
}

/// The negative-definite lattice of a plumbing tree, with cached dual data.
pub struct Lattice {
    graph: ResolutionGraph,
    det: BigInt,
    duals: Vec<Cycle>,
    canonical: Cycle,
    invariant_factors: Vec<BigInt>,
    classes: OnceLock<ClassTable>,
    classification: OnceLock<crate::laufer::Classification>,
}

impl Lattice {
    /// Builds the lattice, rejecting non-negative-definite forms.
    pub fn new(graph: ResolutionGraph) -> Result<Self> {
        let imat = graph.intersection_matrix();
        let big: Vec<Vec<BigInt>> = imat
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let minors = linalg::leading_principal_minors(&big);
        if let Some(k) = linalg::negative_definite_witness(&minors) {
            return Err(Error::NotNegativeDefinite {
                witness: format!(
                    "leading principal minor {k} is {}, expected sign {}",
                    minors[k - 1],
                    if k % 2 == 1 { "negative" } else { "positive" }
                ),
            });
        }
        let det = minors.last().expect("nonempty graph").clone();

        let inverse = linalg::invert(&imat);
        let s = graph.len();
        // Dual base element j is column j of -I^{-1}.
        let duals: Vec<Cycle> = (0..s)
            .map(|j| Cycle::from_rationals((0..s).map(|i| -&inverse[i][j]).collect()))
            .collect();

        // K is determined by (K, E_j) = -2 - e_j, i.e. K = sum (2 + e_j) E*_j.
        let mut canonical = Cycle::zeros(s);
        for j in 0..s {
            let w = BigRational::from_integer(BigInt::from(2 + graph.vertex(j).euler));
            canonical = canonical.plus(&duals[j].scaled(&w));
        }

        let invariant_factors = linalg::smith_invariant_factors(&big)
            .into_iter()
            .filter(|f| f > &BigInt::one())
            .collect();

        Ok(Lattice {
            graph,
            det,
            duals,
            canonical,
            invariant_factors,
            classes: OnceLock::new(),
            classification: OnceLock::new(),
        })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &ResolutionGraph {
        &self.graph
    }

    /// Number of vertices / rank of the lattice.
    pub fn rank(&self) -> usize {
        self.graph.len()
    }

    /// Signed determinant of the intersection matrix.
    pub fn det(&self) -> &BigInt {
        &self.det
    }

    /// Discriminant group order `|det I|`.
    pub fn group_order(&self) -> BigInt {
        self.det.abs()
    }

    /// Isomorphism type of the discriminant group.
    pub fn group_structure(&self) -> GroupStructure {
        GroupStructure {
            order: self.group_order(),
            invariant_factors: self.invariant_factors.clone(),
        }
    }

    /// Exact intersection pairing of two cycles. Uses the tree structure:
    /// `(a, b) = sum_j e_j a_j b_j + sum_{edges (u,v)} (a_u b_v + a_v b_u)`.
    pub fn pair(&self, a: &Cycle, b: &Cycle) -> BigRational {
        assert_eq!(a.len(), self.rank(), "cycle length mismatch");
        assert_eq!(b.len(), self.rank(), "cycle length mismatch");
        let mut acc = BigRational::zero();
        for j in 0..self.rank() {
            let e = BigRational::from_integer(BigInt::from(self.graph.vertex(j).euler));
            acc += e * a.coord(j) * b.coord(j);
        }
        for &(u, v) in self.graph.edges() {
            acc += a.coord(u) * b.coord(v) + a.coord(v) * b.coord(u);
        }
        acc
    }

    /// Pairing of a cycle with the base element `E_j`.
    pub fn pair_with_vertex(&self, a: &Cycle, j: usize) -> BigRational {
        assert_eq!(a.len(), self.rank(), "cycle length mismatch");
        let mut acc = a.coord(j) * BigRational::from_integer(BigInt::from(self.graph.vertex(j).euler));
        for &nb in self.graph.neighbors(j) {
            acc += a.coord(nb);
        }
        acc
    }

    /// The dual base element for vertex `j` (pairing `-1` with `E_j`, `0`
    /// with every other base element). All coordinates are strictly
    /// positive on a connected graph.
    pub fn dual_cycle(&self, j: usize) -> &Cycle {
        &self.duals[j]
    }

    /// Dual coordinates `n_j = -(x, E_j)`; errors unless all are integers
    /// (i.e. unless `x` is in the dual lattice).
    pub fn dual_coordinates(&self, x: &Cycle) -> Result<Vec<BigInt>> {
        (0..self.rank())
            .map(|j| {
                let p = -self.pair_with_vertex(x, j);
                if rat::is_integer(&p) {
                    Ok(p.to_integer())
                } else {
                    Err(Error::NotInDualLattice {
                        id: self.graph.vertex(j).id.clone(),
                        value: rat::format_rational(&-p),
                    })
                }
            })
            .collect()
    }

    /// The cycle with the given dual coordinates: `sum_j n_j dual_cycle(j)`.
    pub fn cycle_from_dual(&self, n: &[BigInt]) -> Cycle {
        assert_eq!(n.len(), self.rank(), "dual coordinate length mismatch");
        let mut acc = Cycle::zeros(self.rank());
        for (j, k) in n.iter().enumerate() {
            if !k.is_zero() {
                acc = acc.plus(&self.duals[j].scaled(&BigRational::from_integer(k.clone())));
            }
        }
        acc
    }

    /// Convenience: cycle from machine-integer dual coordinates.
    pub fn cycle_from_dual_i64(&self, n: &[i64]) -> Cycle {
        let big: Vec<BigInt> = n.iter().map(|&k| BigInt::from(k)).collect();
        self.cycle_from_dual(&big)
    }

    /// The canonical cycle `K`, the unique solution of
    /// `(K, E_j) = -2 - e_j` for every vertex.
    pub fn canonical_cycle(&self) -> &Cycle {
        &self.canonical
    }

    /// Riemann-Roch expression `chi(x) = -(x, x + K) / 2`. Integer-valued
    /// on integral cycles, rational in general.
    pub fn chi(&self, x: &Cycle) -> BigRational {
        let shifted = x.plus(&self.canonical);
        -self.pair(x, &shifted) / BigRational::from_integer(BigInt::from(2))
    }

    /// Lattice/cone membership flags for a cycle.
    pub fn membership(&self, x: &Cycle) -> Membership {
        let in_l = x.is_integral();
        let mut in_l_prime = true;
        let mut anti_nef = true;
        for j in 0..self.rank() {
            let p = self.pair_with_vertex(x, j);
            if !rat::is_integer(&p) {
                in_l_prime = false;
            }
            if p.is_positive() {
                anti_nef = false;
            }
        }
        let effective = x.is_effective();
        let in_s_prime = in_l_prime && anti_nef;
        Membership {
            in_l,
            in_l_prime,
            effective,
            in_s_prime,
            in_s: in_s_prime && in_l,
        }
    }

    /// Class (discriminant group element) of a dual-lattice cycle: the
    /// fractional parts of its coordinates.
    pub fn class_of(&self, x: &Cycle) -> Result<GroupClass> {
        self.dual_coordinates(x)?; // membership check: x must lie in L'
        Ok(GroupClass {
            frac: x.coords().iter().map(rat::fractional_part).collect(),
        })
    }

    /// The zero class of this group.
    pub fn zero_class(&self) -> GroupClass {
        GroupClass::zero(self.rank())
    }

    /// All discriminant group classes, sorted by representative, starting
    /// from the closure of the dual-base generators.
    pub fn enumerate_classes(&self) -> Result<Vec<GroupClass>> {
        Ok(self.class_table()?.reps.clone())
    }

    /// Checks that `class` actually names an element of this group.
    pub fn check_class(&self, class: &GroupClass) -> Result<()> {
        if class.representative().len() != self.rank() {
            return Err(Error::InvalidClassSpec {
                msg: format!(
                    "class has {} coordinates, graph has {}",
                    class.representative().len(),
                    self.rank()
                ),
            });
        }
        let table = self.class_table()?;
        if table.index_of(class).is_none() {
            return Err(Error::InvalidClassSpec {
                msg: format!("{class} is not an element of the discriminant group"),
            });
        }
        Ok(())
    }

    /// The enumerated class table (built once, cached).
    pub(crate) fn class_table(&self) -> Result<&ClassTable> {
        if let Some(t) = self.classes.get() {
            return Ok(t);
        }
        let order = self.group_order();
        if order > BigInt::from(GROUP_ENUMERATION_LIMIT) {
            return Err(Error::GroupTooLarge {
                order: order.to_string(),
            });
        }
        let expected: usize = order.to_string().parse().expect("order fits usize");
        let s = self.rank();

        let generators: Vec<GroupClass> = (0..s)
            .map(|j| GroupClass {
                frac: self.duals[j]
                    .coords()
                    .iter()
                    .map(rat::fractional_part)
                    .collect(),
            })
            .collect();

        // Breadth-first closure of {0} under adding each generator.
        let mut index: BTreeMap<GroupClass, usize> = BTreeMap::new();
        let zero = GroupClass::zero(s);
        index.insert(zero.clone(), 0);
        let mut frontier = vec![zero];
        while let Some(current) = frontier.pop() {
            for g in &generators {
                let next = current.add(g);
                let fresh = index.len();
                if let std::collections::btree_map::Entry::Vacant(e) = index.entry(next.clone()) {
                    e.insert(fresh);
                    frontier.push(next);
                }
            }
        }
        assert_eq!(
            index.len(),
            expected,
            "class closure must have |det| elements"
        );

        // Re-index in sorted order for determinism.
        let reps: Vec<GroupClass> = index.keys().cloned().collect();
        let index: BTreeMap<GroupClass, usize> = reps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        let zero_idx = index[&GroupClass::zero(s)];
        let step: Vec<Vec<u32>> = generators
            .iter()
            .map(|g| {
                reps.iter()
                    .map(|c| index[&c.add(g)] as u32)
                    .collect::<Vec<u32>>()
            })
            .collect();

        let table = ClassTable {
            reps,
            zero: zero_idx,
            step,
            index,
        };
        Ok(self.classes.get_or_init(|| table))
    }

    /// Smallest coordinate of any dual base element over the vertex subset
    /// `u` — the certification constant for series projections. Strictly
    /// positive on a connected graph.
    pub fn min_dual_coordinate_over(&self, u: &[usize]) -> BigRational {
        let mut min: Option<BigRational> = None;
        for dual in &self.duals {
            for &i in u {
                let c = dual.coord(i).clone();
                min = Some(match min {
                    None => c,
                    Some(m) if c < m => c,
                    Some(m) => m,
                });
            }
        }
        min.expect("nonempty vertex subset")
    }

    /// Cached classification slot (set by the saturation layer).
    pub(crate) fn classification_cache(&self) -> &OnceLock<crate::laufer::Classification> {
        &self.classification
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lattice(text: &str) -> Lattice {
        Lattice::new(ResolutionGraph::parse(text).unwrap()).unwrap()
    }

    fn q(s: &str) -> BigRational {
        rat::parse_rational(s).unwrap()
    }

    const A3: &str = "vertex a -2\nvertex m -2\nvertex c -2\nedge a m\nedge m c\n";

    #[test]
    fn rejects_indefinite_forms() {
        let g = ResolutionGraph::parse("vertex a 1\n").unwrap();
        assert!(matches!(
            Lattice::new(g),
            Err(Error::NotNegativeDefinite { .. })
        ));
    }

    #[test]
    fn dual_base_of_chain() {
        let lat = lattice(A3);
        assert_eq!(lat.det(), &BigInt::from(-4));
        assert_eq!(lat.group_order(), BigInt::from(4));
        let expect = [
            ["3/4", "1/2", "1/4"],
            ["1/2", "1", "1/2"],
            ["1/4", "1/2", "3/4"],
        ];
        for (j, row) in expect.iter().enumerate() {
            let dual = lat.dual_cycle(j);
            for (i, val) in row.iter().enumerate() {
                assert_eq!(dual.coord(i), &q(val), "dual {j} coordinate {i}");
            }
            // Defining property: (E*_j, E_k) = -delta_jk.
            for k in 0..3 {
                let expect = if k == j { q("-1") } else { q("0") };
                assert_eq!(lat.pair_with_vertex(dual, k), expect);
            }
        }
    }

    #[test]
    fn canonical_cycle_and_chi() {
        // All -2 weights: K = 0 and chi(E*_1) = -(E*_1, E*_1)/2 = 3/8.
        let lat = lattice(A3);
        assert_eq!(lat.canonical_cycle(), &Cycle::zeros(3));
        assert_eq!(lat.chi(lat.dual_cycle(0)), q("3/8"));
        assert_eq!(lat.chi(&Cycle::integral(&[1, 1, 1])), q("1"));

        // Single -p vertex: K = -((p-2)/p) E.
        for p in [2i64, 3, 5] {
            let lat = lattice(&format!("vertex v -{p}\n"));
            assert_eq!(
                lat.canonical_cycle().coord(0),
                &BigRational::new(BigInt::from(-(p - 2)), BigInt::from(p))
            );
            assert_eq!(lat.chi(&Cycle::integral(&[1])), q("1"));
        }
    }

    #[test]
    fn dual_coordinates_round_trip() {
        let lat = lattice(A3);
        let x = lat.cycle_from_dual_i64(&[2, 0, 1]);
        assert_eq!(
            lat.dual_coordinates(&x).unwrap(),
            vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)]
        );
        // E_0 in dual coordinates is the negated first matrix row.
        let e0 = Cycle::integral(&[1, 0, 0]);
        assert_eq!(
            lat.dual_coordinates(&e0).unwrap(),
            vec![BigInt::from(2), BigInt::from(-1), BigInt::from(0)]
        );
        // A strictly fractional pairing is rejected.
        let half = Cycle::from_rationals(vec![q("1/3"), q("0"), q("0")]);
        assert!(matches!(
            lat.dual_coordinates(&half),
            Err(Error::NotInDualLattice { .. })
        ));
    }

    #[test]
    fn membership_flags() {
        let lat = lattice(A3);
        let e_star = lat.dual_cycle(0).clone();
        let m = lat.membership(&e_star);
        assert!(m.in_l_prime && m.in_s_prime && m.effective);
        assert!(!m.in_l && !m.in_s);

        let e = Cycle::integral(&[1, 0, 0]);
        let m = lat.membership(&e);
        assert!(m.in_l && m.effective);
        assert!(!m.in_s_prime); // (E_a, E_m) = 1 > 0, so E_a is not anti-nef

        let zmin = Cycle::integral(&[1, 1, 1]);
        let m = lat.membership(&zmin);
        assert!(m.in_s && m.in_s_prime && m.in_l);
    }

    #[test]
    fn group_structures() {
        let lat = lattice(A3);
        let gs = lat.group_structure();
        assert_eq!(gs.order, BigInt::from(4));
        assert_eq!(gs.invariant_factors, vec![BigInt::from(4)]);

        // 3-star of -2's around a -2 center: Z/2 + Z/2.
        let d4 = lattice(
            "vertex c -2\nvertex l1 -2\nvertex l2 -2\nvertex l3 -2\nedge c l1\nedge c l2\nedge c l3\n",
        );
        let gs = d4.group_structure();
        assert_eq!(gs.order, BigInt::from(4));
        assert_eq!(gs.invariant_factors, vec![BigInt::from(2), BigInt::from(2)]);
    }

    #[test]
    fn class_enumeration_matches_group_order() {
        let lat = lattice(A3);
        let classes = lat.enumerate_classes().unwrap();
        assert_eq!(classes.len(), 4);
        let zero = lat.zero_class();
        assert!(classes.contains(&zero));
        // Classes of E*_1 generate: [E*_1] has order 4 in the group.
        let g = lat.class_of(lat.dual_cycle(0)).unwrap();
        let mut acc = g.clone();
        let mut order = 1;
        while !acc.is_zero() {
            acc = acc.add(&g);
            order += 1;
        }
        assert_eq!(order, 4);
    }

    #[test]
    fn class_table_steps_agree_with_class_of() {
        let lat = lattice(A3);
        let table = lat.class_table().unwrap();
        let n = [3u32, 1, 2];
        let by_table = table.index_of_dual(&n);
        let cycle = lat.cycle_from_dual_i64(&[3, 1, 2]);
        let direct = lat.class_of(&cycle).unwrap();
        assert_eq!(table.reps[by_table], direct);
    }

    #[test]
    fn min_dual_coordinate() {
        let lat = lattice(A3);
        assert_eq!(lat.min_dual_coordinate_over(&[0]), q("1/4"));
        assert_eq!(lat.min_dual_coordinate_over(&[0, 1]), q("1/4"));
    }
}
