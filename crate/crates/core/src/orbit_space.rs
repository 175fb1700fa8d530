//! Weighted orbit spaces `M/T^2` of simply connected 4-manifolds.
//!
//! The orbit space is a disk whose boundary is a cycle of `t` edges. Edge `i`
//! joins vertex `i` to vertex `i + 1 (mod t)` and carries the weight of its
//! circle isotropy group. Vertex `i` sits between edges `i - 1` and `i`, and its
//! determinant `ε_i = det(edge_{i-1}, edge_i)` must be `±1`.
//!
//! The sequence order is taken as the positive boundary orientation. The
//! opposite convention is reached with [`WeightedOrbitSpace::orientation_reverse`].

use alloc::vec::Vec;
use core::fmt;

use crate::lattice::{det2, pair_basis_transform, LatticeTransform, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSpaceError {
    TooShort { len: usize },
    /// Edge `index` has a zero or non-primitive weight.
    NotPrimitive { index: usize, m: i64, n: i64 },
    /// `|ε_vertex| != 1`.
    IllegalDeterminant { vertex: usize, det: i64 },
}

impl fmt::Display for OrbitSpaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSpaceError::TooShort { len } => {
                write!(f, "an orbit space needs at least 2 edges, got {len}")
            }
            OrbitSpaceError::NotPrimitive { index, m, n } => {
                write!(f, "edge {index} has non-primitive weight ({m}, {n})")
            }
            OrbitSpaceError::IllegalDeterminant { vertex, det } => {
                write!(f, "vertex {vertex} has determinant {det}, expected ±1")
            }
        }
    }
}

impl OrbitSpaceError {
    pub fn code(&self) -> &'static str {
        match self {
            OrbitSpaceError::TooShort { .. } => "too_short",
            OrbitSpaceError::NotPrimitive { .. } => "not_primitive",
            OrbitSpaceError::IllegalDeterminant { .. } => "illegal_determinant",
        }
    }
}

impl core::error::Error for OrbitSpaceError {}

/// A legal weighted orbit space. Construction validates; values are immutable.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedOrbitSpace {
    edges: Vec<WeightVector>,
}

/// Result of the Ric₂ obstruction: weights of non-adjacent edges must not be parallel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// Non-adjacent edge pairs `(i, j)`, `i < j`, with `r_{i,j} = 0`.
    pub witnesses: Vec<(usize, usize)>,
}

impl WeightedOrbitSpace {
    /// Validates a raw edge list.
    pub fn validate(raw: &[(i64, i64)]) -> Result<Self, OrbitSpaceError> {
        if raw.len() < 2 {
            return Err(OrbitSpaceError::TooShort { len: raw.len() });
        }
        let edges = raw
            .iter()
            .enumerate()
            .map(|(index, &(m, n))| WeightVector::new(m, n).map_err(|_| OrbitSpaceError::NotPrimitive { index, m, n }))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(edges)
    }

    pub fn new(edges: Vec<WeightVector>) -> Result<Self, OrbitSpaceError> {
        let t = edges.len();
        if t < 2 {
            return Err(OrbitSpaceError::TooShort { len: t });
        }
        for vertex in 0..t {
            let det = det2(edges[(vertex + t - 1) % t], edges[vertex]);
            if det.abs() != 1 {
                return Err(OrbitSpaceError::IllegalDeterminant { vertex, det });
            }
        }
        Ok(WeightedOrbitSpace { edges })
    }

    /// Number of edges, equal to the number of vertices.
    #[inline]
    pub fn t(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[WeightVector] {
        &self.edges
    }

    /// Edge `i`, indices taken mod `t`.
    #[inline]
    pub fn edge(&self, i: usize) -> WeightVector {
        self.edges[i % self.t()]
    }

    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        self.edges.iter().map(WeightVector::as_pair).collect()
    }

    /// Euler characteristic of the 4-manifold: the number of fixed points.
    pub fn euler_characteristic(&self) -> usize {
        self.t()
    }

    /// `ε_i = det(edge_{i-1}, edge_i)`, always `±1`.
    pub fn epsilon(&self, i: usize) -> i64 {
        let t = self.t();
        let i = i % t;
        det2(self.edges[(i + t - 1) % t], self.edges[i])
    }

    pub fn epsilons(&self) -> Vec<i64> {
        (0..self.t()).map(|i| self.epsilon(i)).collect()
    }

    /// `r_{i,j} = det(edge_i, edge_j)`.
    pub fn r_pair(&self, i: usize, j: usize) -> i64 {
        det2(self.edge(i), self.edge(j))
    }

    /// Edges are adjacent iff they share a vertex: `j ≡ i ± 1 (mod t)`.
    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let t = self.t();
        let (i, j) = (i % t, j % t);
        (i + 1) % t == j || (j + 1) % t == i
    }

    /// All pairs `(i, j)`, `i < j`, of distinct edges sharing no vertex.
    pub fn non_adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let t = self.t();
        let mut out = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                if !self.are_adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A space supporting an invariant Ric₂ > 0 metric has `r_{i,j} != 0` for
    /// every non-adjacent pair. With `t <= 3` there are no such pairs.
    pub fn ric2_admissible(&self) -> AdmissibilityReport {
        let witnesses: Vec<_> = self
            .non_adjacent_pairs()
            .into_iter()
            .filter(|&(i, j)| self.r_pair(i, j) == 0)
            .collect();
        AdmissibilityReport {
            admissible: witnesses.is_empty(),
            witnesses,
        }
    }

    /// Reverses the edge sequence. Every ε changes sign.
    pub fn orientation_reverse(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.reverse();
        WeightedOrbitSpace { edges }
    }

    /// Starts the cycle at edge `k`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.rotate_left(k % self.t());
        WeightedOrbitSpace { edges }
    }

    /// Reparametrizes the torus: applies `tr` to every weight.
    pub fn transform(&self, tr: &LatticeTransform) -> Self {
        WeightedOrbitSpace {
            edges: self.edges.iter().map(|&w| tr.apply(w)).collect(),
        }
    }

    /// Replaces edge `i`'s weight by its negative. ε_i and ε_{i+1} change sign.
    pub fn flip_sign(&self, i: usize) -> Self {
        let mut edges = self.edges.clone();
        let t = self.t();
        edges[i % t] = edges[i % t].negated();
        WeightedOrbitSpace { edges }
    }

    /// Applies a symmetry group element.
    pub fn act(&self, g: &Symmetry) -> Self {
        assert_eq!(g.flips.len(), self.t(), "symmetry sized for a different cycle");
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .zip(&g.flips)
            .map(|(&w, &flip)| {
                let w = g.transform.apply(w);
                if flip { w.negated() } else { w }
            })
            .collect();
        edges.rotate_left(g.rotation % self.t());
        if g.reverse {
            edges.reverse();
        }
        WeightedOrbitSpace { edges }
    }

    /// Distinguished representative of the orbit under [`Symmetry`].
    ///
    /// For every starting edge, direction, and sign choice on the first two
    /// edges, the first two edges are moved to `(1,0), (0,1)` and the remaining
    /// weights are sign-normalized; the lexicographically least sequence wins.
    /// The result always begins with `(1,0), (0,1)`.
    pub fn canonical_form(&self) -> Self {
        let t = self.t();
        let mut best: Option<Vec<WeightVector>> = None;
        let mut candidate = Vec::with_capacity(t);
        for reverse in [false, true] {
            for start in 0..t {
                let at = |k: usize| {
                    if reverse {
                        self.edges[(start + t - k % t) % t]
                    } else {
                        self.edges[(start + k) % t]
                    }
                };
                for (s0, s1) in [(false, false), (false, true), (true, false), (true, true)] {
                    let u0 = if s0 { at(0).negated() } else { at(0) };
                    let u1 = if s1 { at(1).negated() } else { at(1) };
                    let basis = pair_basis_transform(u0, u1).expect("adjacent edges of a legal space are unimodular");
                    candidate.clear();
                    candidate.push(WeightVector::E1);
                    candidate.push(WeightVector::E2);
                    candidate.extend((2..t).map(|k| basis.apply(at(k)).sign_normalized()));
                    if best.as_ref().map_or(true, |b| candidate < *b) {
                        best = Some(candidate.clone());
                    }
                }
            }
        }
        WeightedOrbitSpace {
            edges: best.expect("t >= 2"),
        }
    }

    /// Largest absolute coordinate over all weights.
    pub fn max_abs_entry(&self) -> u64 {
        self.edges.iter().map(WeightVector::max_abs).max().unwrap_or(0)
    }
}

impl fmt::Display for WeightedOrbitSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, w) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

/// Element of the symmetry group acting on orbit spaces: a torus
/// reparametrization, per-edge sign flips, a cyclic rotation, and an optional
/// reversal, applied in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    pub transform: LatticeTransform,
    pub flips: Vec<bool>,
    pub rotation: usize,
    pub reverse: bool,
}

impl Symmetry {
    pub fn identity(t: usize) -> Self {
        Symmetry {
            transform: LatticeTransform::IDENTITY,
            flips: alloc::vec![false; t],
            rotation: 0,
            reverse: false,
        }
    }

    /// Whether the element reverses the orientation of the 4-manifold.
    pub fn is_orientation_reversing(&self) -> bool {
        (self.transform.det() < 0) != self.reverse
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn space(raw: &[(i64, i64)]) -> WeightedOrbitSpace {
        WeightedOrbitSpace::validate(raw).unwrap()
    }

    const S4: &[(i64, i64)] = &[(1, 0), (0, 1)];
    const CP2: &[(i64, i64)] = &[(1, 0), (0, 1), (-1, 1)];
    const S2XS2: &[(i64, i64)] = &[(1, 0), (0, 1), (1, 0), (0, 1)];

    #[test]
    fn validate_examples() {
        assert_eq!(space(S4).t(), 2);
        assert_eq!(
            WeightedOrbitSpace::validate(&[(1, 0), (2, 1), (0, 1)]),
            Err(OrbitSpaceError::IllegalDeterminant { vertex: 2, det: 2 })
        );
        assert_eq!(space(CP2).t(), 3);
    }

    #[test]
    fn validate_errors() {
        assert_eq!(WeightedOrbitSpace::validate(&[(1, 0)]), Err(OrbitSpaceError::TooShort { len: 1 }));
        assert_eq!(WeightedOrbitSpace::validate(&[]), Err(OrbitSpaceError::TooShort { len: 0 }));
        assert_eq!(
            WeightedOrbitSpace::validate(&[(1, 0), (0, 0)]),
            Err(OrbitSpaceError::NotPrimitive { index: 1, m: 0, n: 0 })
        );
        assert_eq!(
            WeightedOrbitSpace::validate(&[(2, 2), (0, 1)]),
            Err(OrbitSpaceError::NotPrimitive { index: 0, m: 2, n: 2 })
        );
        // Parallel consecutive edges.
        assert_eq!(
            WeightedOrbitSpace::validate(&[(1, 0), (1, 0), (0, 1)]),
            Err(OrbitSpaceError::IllegalDeterminant { vertex: 1, det: 0 })
        );
    }

    #[test]
    fn euler_characteristic_counts_vertices() {
        assert_eq!(space(S4).euler_characteristic(), 2);
        assert_eq!(space(CP2).euler_characteristic(), 3);
        assert_eq!(space(S2XS2).euler_characteristic(), 4);
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(space(S4).epsilon(1), 1);
        assert_eq!(space(S4).epsilon(0), -1);
        // det((-1,1),(1,0)) = 0 - 1.
        assert_eq!(space(CP2).epsilon(0), -1);
        assert_eq!(space(CP2).epsilons(), vec![-1, 1, 1]);
    }

    #[test]
    fn r_pair_examples() {
        assert_eq!(space(S2XS2).r_pair(0, 2), 0);
        assert_eq!(space(S2XS2).r_pair(1, 3), 0);
        assert_eq!(space(CP2).r_pair(0, 2), 1);
    }

    #[test]
    fn adjacency() {
        let x = space(S2XS2);
        assert_eq!(x.non_adjacent_pairs(), vec![(0, 2), (1, 3)]);
        assert!(x.are_adjacent(3, 0));
        assert!(space(CP2).non_adjacent_pairs().is_empty());
        assert!(space(S4).non_adjacent_pairs().is_empty());
        let five = space(&[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)]);
        assert_eq!(five.non_adjacent_pairs(), vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
    }

    #[test]
    fn admissibility_examples() {
        let r = space(CP2).ric2_admissible();
        assert!(r.admissible);
        assert!(r.witnesses.is_empty());

        let r = space(S2XS2).ric2_admissible();
        assert!(!r.admissible);
        assert_eq!(r.witnesses, vec![(0, 2), (1, 3)]);

        // The cycle (1,0),(0,1),(-1,1),(-1,2) has nonzero r02 = r13 = 1 but is
        // not legal: det((-1,2),(1,0)) = -2 at vertex 0.
        assert_eq!(
            WeightedOrbitSpace::validate(&[(1, 0), (0, 1), (-1, 1), (-1, 2)]),
            Err(OrbitSpaceError::IllegalDeterminant { vertex: 0, det: -2 })
        );
        // A legal neighbour: r02 = det((1,0),(-1,1)) = 1, r13 = det((0,1),(-2,1)) = 2.
        let x = space(&[(1, 0), (0, 1), (-1, 1), (-2, 1)]);
        assert_eq!(x.r_pair(0, 2), 1);
        assert_eq!(x.r_pair(1, 3), 2);
        assert!(x.ric2_admissible().admissible);
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(space(S4).canonical_form(), space(S4));
        assert_eq!(space(&[(0, 1), (1, 0)]).canonical_form(), space(S4));
    }

    /// Independent oracle: close the orbit under the group generators by
    /// breadth-first search over sign-normalized sequences whose entries stay
    /// in a box, and report whether `target` is reached.
    fn same_orbit_by_search(a: &WeightedOrbitSpace, b: &WeightedOrbitSpace, bound: u64) -> bool {
        use alloc::collections::{BTreeSet, VecDeque};
        let norm = |x: &WeightedOrbitSpace| -> Vec<(i64, i64)> { x.edges().iter().map(|w| w.sign_normalized().as_pair()).collect() };
        let target = norm(b);
        let gens = [
            LatticeTransform::new([[1, 1], [0, 1]]).unwrap(),
            LatticeTransform::new([[1, -1], [0, 1]]).unwrap(),
            LatticeTransform::new([[0, 1], [1, 0]]).unwrap(),
            LatticeTransform::new([[-1, 0], [0, 1]]).unwrap(),
        ];
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(norm(a));
        queue.push_back(a.clone());
        while let Some(x) = queue.pop_front() {
            if norm(&x) == target {
                return true;
            }
            let mut next: Vec<WeightedOrbitSpace> = gens.iter().map(|g| x.transform(g)).collect();
            next.push(x.rotate(1));
            next.push(x.orientation_reverse());
            for y in next {
                if y.max_abs_entry() <= bound && seen.insert(norm(&y)) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    #[test]
    fn canonical_form_matches_orbit_search() {
        let a = space(&[(2, 1), (1, 1), (1, 0)]);
        let b = space(CP2);
        let oracle = same_orbit_by_search(&a, &b, 4);
        // Frozen from the oracle above: both are t = 3 legal cycles.
        assert!(oracle);
        assert_eq!(a.canonical_form() == b.canonical_form(), oracle);

        let c = space(S2XS2);
        let d = space(&[(1, 0), (0, 1), (1, 2), (0, 1)]);
        let oracle = same_orbit_by_search(&c, &d, 6);
        assert!(!oracle);
        assert_eq!(c.canonical_form() == d.canonical_form(), oracle);
    }

    #[test]
    fn orientation_reverse_examples() {
        assert_eq!(space(S4).orientation_reverse(), space(&[(0, 1), (1, 0)]));
        let x = space(CP2);
        let prod = |y: &WeightedOrbitSpace| y.epsilons().iter().product::<i64>();
        // Forward: -(-1)(1)(1) = 1. Reversed [(-1,1),(0,1),(1,0)]: ε = (1, -1, -1), -(1) = -1.
        assert_eq!(-prod(&x), 1);
        assert_eq!(-prod(&x.orientation_reverse()), -1);
        assert_eq!(x.orientation_reverse().orientation_reverse(), x);
    }

    #[test]
    fn act_identity_and_orientation_flag() {
        let x = space(CP2);
        assert_eq!(x.act(&Symmetry::identity(3)), x);
        let mut g = Symmetry::identity(3);
        g.reverse = true;
        assert!(g.is_orientation_reversing());
        g.transform = LatticeTransform::new([[0, 1], [1, 0]]).unwrap();
        assert!(!g.is_orientation_reversing());
    }

    fn legal_space() -> impl Strategy<Value = WeightedOrbitSpace> {
        // Walk of unimodular steps inside [-3, 3]^2, kept when it closes up.
        (2usize..=7, prop::collection::vec(any::<usize>(), 5)).prop_filter_map("closes", |(t, picks)| {
            let mut edges = vec![WeightVector::E1, WeightVector::E2];
            for &pick in picks.iter().take(t - 2) {
                let prev = *edges.last().unwrap();
                let options: Vec<_> = (-3i64..=3)
                    .flat_map(|m| (-3i64..=3).map(move |n| (m, n)))
                    .filter_map(|(m, n)| WeightVector::new(m, n).ok())
                    .filter(|&w| crate::lattice::det2(prev, w).abs() == 1)
                    .collect();
                edges.push(options[pick % options.len()]);
            }
            WeightedOrbitSpace::new(edges).ok()
        })
    }

    fn symmetry(t: usize) -> impl Strategy<Value = Symmetry> {
        (
            [[-3i64..=3, -3i64..=3], [-3i64..=3, -3i64..=3]],
            prop::collection::vec(any::<bool>(), t),
            0..t,
            any::<bool>(),
        )
            .prop_filter_map("unimodular", |(rows, flips, rotation, reverse)| {
                Some(Symmetry {
                    transform: LatticeTransform::new(rows).ok()?,
                    flips,
                    rotation,
                    reverse,
                })
            })
    }

    fn space_and_symmetry() -> impl Strategy<Value = (WeightedOrbitSpace, Symmetry)> {
        legal_space().prop_flat_map(|x| {
            let t = x.t();
            (Just(x), symmetry(t))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig { max_global_rejects: 100_000, ..ProptestConfig::default() })]

        #[test]
        fn epsilons_are_units(x in legal_space()) {
            for i in 0..x.t() {
                prop_assert_eq!(x.epsilon(i), x.r_pair(i + x.t() - 1, i));
                prop_assert_eq!(x.epsilon(i).abs(), 1);
            }
            prop_assert_eq!(x.euler_characteristic(), x.edges().len());
        }

        #[test]
        fn canonical_form_is_invariant((x, g) in space_and_symmetry()) {
            let y = x.act(&g);
            prop_assert!(WeightedOrbitSpace::new(y.edges().to_vec()).is_ok());
            prop_assert_eq!(y.canonical_form(), x.canonical_form());
        }

        #[test]
        fn canonical_form_is_idempotent(x in legal_space()) {
            let c = x.canonical_form();
            prop_assert_eq!(c.canonical_form(), c.clone());
            prop_assert_eq!(&c.edges()[..2], &[WeightVector::E1, WeightVector::E2][..]);
        }

        #[test]
        fn admissibility_is_invariant((x, g) in space_and_symmetry()) {
            prop_assert_eq!(x.act(&g).ric2_admissible().admissible, x.ric2_admissible().admissible);
            prop_assert_eq!(x.act(&g).ric2_admissible().witnesses.len(), x.ric2_admissible().witnesses.len());
        }

        #[test]
        fn reversal_negates_epsilons(x in legal_space()) {
            let y = x.orientation_reverse();
            let t = x.t();
            for k in 0..t {
                // Vertex k of the reversal sits between old edges t-k and t-1-k.
                prop_assert_eq!(y.epsilon(k), -x.epsilon((t - k) % t));
            }
            prop_assert_eq!(y.orientation_reverse().canonical_form(), x.canonical_form());
        }
    }
}
