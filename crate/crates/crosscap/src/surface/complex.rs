//! Gluing a polygon into a CW complex, and the homology of the result.
//!
//! The identification refines each side label into oriented edges:
//!
//! - the two outer `a_1` sides of the crosscap block glue to a single edge
//!   `a1`, both traversed forward (this same-direction pair is what makes
//!   the surface nonorientable);
//! - the ascending/descending `a_j` sides (`1 < j < g`) split into two
//!   edges: `aj` pairs the crosscap block's ascending side with the return
//!   block's descending side (reversed), and `aj'` pairs the crosscap
//!   block's descending side with the return block's ascending side
//!   (forward);
//! - the two `a_g` sides glue to the edge `ag`, the return one reversed;
//! - the return block's `a_1` side folds onto itself as the edge `a1'`,
//!   traversed out and back with a fresh tip vertex in between;
//! - each `v_i` pair folds to an edge `vi` (out and back); for a marked
//!   point the fold corner is the point, for a boundary block the fold
//!   pinches the free side `ui` into a circle.
//!
//! Vertices are corner classes: walking the face word, the outgoing end of
//! each side meets the incoming end of the next.  For genus `g` with `n`
//! marked points and `s` boundary circles this yields `g + n + s` vertex
//! classes, `2g - 1 + n + 2s` edges (`g >= 2`), and one face, so the Euler
//! characteristic is `2 - g - s` as it must be.
//!
//! First homology is computed from the boundary matrices: a basis of
//! `ker d1` is read off the column certificate of the Smith normal form of
//! `d1`, the face relation `d2` is rewritten in that basis, and the
//! cokernel's invariant factors are the answer.  For the closed surface the
//! face relation is `2*(a1 + a2' + ... + a{g-1}')`, giving `Z^{g-1} + Z/2`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{
    invariant_factors, snf, unimodular_inverse, AbelianInvariants, IntegerMatrix,
};
use crate::surface::polygon::{Label, PolygonModel, SurfaceSpec};

/// An oriented 1-cell of the glued complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Name, e.g. `a2`, `a2'`, `v1`, `u1`.
    pub name: String,
    /// Vertex class of the tail.
    pub tail: usize,
    /// Vertex class of the head.
    pub head: usize,
    /// True for free (unglued) sides, which lie on the boundary.
    pub boundary: bool,
}

/// A glued polygon: one face, oriented edges, and corner-identified
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    spec: SurfaceSpec,
    vertex_count: usize,
    edges: Vec<Edge>,
    /// The face's attaching word as (edge index, direction) pairs.
    face: Vec<(usize, i8)>,
    /// Vertex classes of the marked points, in label order.
    marked: Vec<usize>,
}

/// Minimal union-find over `0..n`.
struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

/// True if a polygon word admits an orientation-consistent identification:
/// no label is traversed twice in the same direction.
///
/// This is the classical orientability test for identification polygons.
/// Words produced by [`build_polygon`](crate::surface::build_polygon) always
/// fail it — the outer `a_1` pair (or the `a_1 a_1` crosscap for `g = 1`)
/// runs the same way — which is exactly the nonorientability of the surface.
pub fn orientable_word(word: &[(Label, i8)]) -> bool {
    let mut seen: std::collections::BTreeMap<Label, Vec<i8>> = std::collections::BTreeMap::new();
    for (label, sign) in word {
        seen.entry(*label).or_default().push(*sign);
    }
    seen.values()
        .all(|signs| signs.len() < 2 || signs.iter().sum::<i8>() == 0)
}

/// Side roles during gluing, before vertex identification.
struct SideplanEdge {
    name: String,
    boundary: bool,
}

/// Mutable state threaded through the gluing passes.
struct GlueState {
    edges: Vec<SideplanEdge>,
    edge_index: std::collections::BTreeMap<String, usize>,
    face: Vec<(usize, i8)>,
    /// (edge index, marked?) for every fold side.
    folds: Vec<(usize, bool)>,
}

impl GlueState {
    fn intern(&mut self, name: &str, boundary: bool) -> usize {
        *self
            .edge_index
            .entry(name.to_string())
            .or_insert_with(|| {
                self.edges.push(SideplanEdge {
                    name: name.to_string(),
                    boundary,
                });
                self.edges.len() - 1
            })
    }

    fn emit_planned(&mut self, plan: &[(Label, i8, String, i8)]) {
        for (_, _, name, dir) in plan {
            let e = self.intern(name, false);
            if *dir == 0 {
                // Fold side: traversed out and back.
                self.folds.push((e, false));
                self.face.push((e, 1));
                self.face.push((e, -1));
            } else {
                self.face.push((e, *dir));
            }
        }
    }
}

/// Checks one rigid block of the word against its plan.
fn check_block(
    word: &[(Label, i8)],
    offset: usize,
    plan: &[(Label, i8, String, i8)],
) -> Result<()> {
    for (k, (label, sign, _, _)) in plan.iter().enumerate() {
        let (got_label, got_sign) = word[offset + k];
        if got_label != *label || got_sign != *sign {
            return Err(Error::GluingInvalid(format!(
                "side {} is {}{}, expected {}{}",
                offset + k,
                got_label,
                if got_sign == 1 { "" } else { "^-1" },
                label,
                if *sign == 1 { "" } else { "^-1" },
            )));
        }
    }
    Ok(())
}

/// Glues a polygon model into its [`CellComplex`].
///
/// The word must consist of the crosscap block, then marked-point blocks
/// `v v^-1` and boundary blocks `v u v^-1` in any order, then the return
/// block, with the exact signs produced by
/// [`build_polygon`](crate::surface::build_polygon).  Only the middle
/// blocks may be reordered or use permuted `v` labels.
pub fn glue(model: &PolygonModel) -> Result<CellComplex> {
    let spec = model.spec();
    let g = spec.genus;
    let word = model.word();
    let fail = |msg: String| Error::GluingInvalid(msg);

    let block1_len = if g == 1 { 1 } else { (2 * g - 1) as usize };
    let block2_len = if g == 1 { 1 } else { (2 * g - 2) as usize };
    let middle_len = (2 * spec.punctures + 3 * spec.boundary) as usize;
    if word.len() != block1_len + middle_len + block2_len {
        return Err(fail(format!(
            "word has {} sides, expected {}",
            word.len(),
            block1_len + middle_len + block2_len
        )));
    }

    // Expected crosscap and return blocks, as (label, sign, edge, direction).
    // The return block's a_1 entry is the fold side handled separately.
    let mut plan: Vec<(Label, i8, String, i8)> = Vec::new();
    if g == 1 {
        plan.push((Label::A(1), 1, "a1".into(), 1));
    } else {
        plan.push((Label::A(1), 1, "a1".into(), 1));
        for j in 2..g {
            plan.push((Label::A(j), 1, format!("a{j}"), 1));
        }
        plan.push((Label::A(g), 1, format!("a{g}"), 1));
        for j in (2..g).rev() {
            plan.push((Label::A(j), 1, format!("a{j}'"), 1));
        }
        plan.push((Label::A(1), 1, "a1".into(), 1));
    }
    let block1_plan = plan.clone();
    let mut block2_plan: Vec<(Label, i8, String, i8)> = Vec::new();
    if g == 1 {
        block2_plan.push((Label::A(1), 1, "a1".into(), 1));
    } else {
        block2_plan.push((Label::A(1), 1, "a1'".into(), 0)); // 0: fold side
        for j in 2..g {
            block2_plan.push((Label::A(j), 1, format!("a{j}'"), 1));
        }
        block2_plan.push((Label::A(g), -1, format!("a{g}"), -1));
        for j in (2..g).rev() {
            block2_plan.push((Label::A(j), -1, format!("a{j}"), -1));
        }
    }

    // Edge registry, face word, and fold bookkeeping under construction.
    // Folds record (edge index, marked?); the fold-corner vertex is
    // resolved after corner identification.
    let mut builder = GlueState {
        edges: Vec::new(),
        edge_index: std::collections::BTreeMap::new(),
        face: Vec::new(),
        folds: Vec::new(),
    };

    check_block(word, 0, &block1_plan)?;
    check_block(word, block1_len + middle_len, &block2_plan)?;

    builder.emit_planned(&block1_plan);

    // Middle: marked-point blocks v v^-1 and boundary blocks v u v^-1.
    let mut pos = block1_len;
    let end = block1_len + middle_len;
    let mut seen_v = std::collections::BTreeSet::new();
    let mut seen_u = std::collections::BTreeSet::new();
    while pos < end {
        let (label, sign) = word[pos];
        let Label::V(vi) = label else {
            return Err(fail(format!(
                "side {pos} is {label}, expected a v-label starting a block"
            )));
        };
        if sign != 1 || !seen_v.insert(vi) {
            return Err(fail(format!("v{vi} block is malformed at side {pos}")));
        }
        let vname = format!("v{vi}");
        match word.get(pos + 1) {
            Some(&(l2, s2)) if l2 == label => {
                // Marked point: v v^-1.
                if s2 != -1 {
                    return Err(fail(format!(
                        "marked-point block v{vi} must close with v{vi}^-1"
                    )));
                }
                let e = builder.intern(&vname, false);
                builder.folds.push((e, true));
                builder.face.push((e, 1));
                builder.face.push((e, -1));
                pos += 2;
            }
            Some(&(Label::U(ui), s2)) => {
                // Boundary: v u v^-1.
                if s2 != 1 || !seen_u.insert(ui) {
                    return Err(fail(format!("boundary block at side {pos} is malformed")));
                }
                match word.get(pos + 2) {
                    Some(&(l3, -1)) if l3 == label => {}
                    _ => {
                        return Err(fail(format!(
                            "boundary block v{vi} u{ui} must close with v{vi}^-1"
                        )))
                    }
                }
                let ev = builder.intern(&vname, false);
                let eu = builder.intern(&format!("u{ui}"), true);
                builder.face.push((ev, 1));
                builder.face.push((eu, 1));
                builder.face.push((ev, -1));
                pos += 3;
            }
            _ => return Err(fail(format!("side {pos} starts an incomplete block"))),
        }
    }

    builder.emit_planned(&block2_plan);
    let GlueState {
        edges, face, folds, ..
    } = builder;

    // Corner identification: out of side i meets in of side i+1 (cyclic).
    // Atom 2e is tail(e), atom 2e+1 is head(e).
    let mut uf = UnionFind::new(2 * edges.len());
    let ends = |&(e, dir): &(usize, i8)| -> (usize, usize) {
        if dir == 1 {
            (2 * e, 2 * e + 1) // in at tail, out at head
        } else {
            (2 * e + 1, 2 * e) // reversed
        }
    };
    for i in 0..face.len() {
        let (_, out) = ends(&face[i]);
        let (inn, _) = ends(&face[(i + 1) % face.len()]);
        uf.union(out, inn);
    }

    // Compress classes to 0..V.
    let mut class_of = vec![usize::MAX; 2 * edges.len()];
    let mut vertex_count = 0;
    for atom in 0..2 * edges.len() {
        let root = uf.find(atom);
        if class_of[root] == usize::MAX {
            class_of[root] = vertex_count;
            vertex_count += 1;
        }
        class_of[atom] = class_of[root];
    }

    let edges: Vec<Edge> = edges
        .into_iter()
        .enumerate()
        .map(|(e, plan)| Edge {
            name: plan.name,
            tail: class_of[2 * e],
            head: class_of[2 * e + 1],
            boundary: plan.boundary,
        })
        .collect();

    // Marked points sit at the fold corners of their v-edges (the head end).
    let marked: Vec<usize> = folds
        .iter()
        .filter(|(_, marked)| *marked)
        .map(|&(e, _)| edges[e].head)
        .collect();

    Ok(CellComplex {
        spec,
        vertex_count,
        edges,
        face,
        marked,
    })
}

impl CellComplex {
    /// The surface parameters this complex was built from.
    pub fn spec(&self) -> SurfaceSpec {
        self.spec
    }

    /// Number of vertex classes.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The oriented edges.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The face's attaching word as (edge index, direction) pairs.
    pub fn face(&self) -> &[(usize, i8)] {
        &self.face
    }

    /// Vertex classes of the marked points.
    pub fn marked_vertices(&self) -> &[usize] {
        &self.marked
    }

    /// `V - E + F` with the single face.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edges.len() as i64 + 1
    }

    /// Number of boundary circles: connected components of the free edges.
    pub fn boundary_circles(&self) -> usize {
        let roots: Vec<usize> = (0..self.edges.len()).collect();
        let mut uf = UnionFind(roots);
        let boundary: Vec<usize> = (0..self.edges.len())
            .filter(|&e| self.edges[e].boundary)
            .collect();
        for (i, &a) in boundary.iter().enumerate() {
            for &b in &boundary[i + 1..] {
                let (ea, eb) = (&self.edges[a], &self.edges[b]);
                if ea.tail == eb.tail
                    || ea.tail == eb.head
                    || ea.head == eb.tail
                    || ea.head == eb.head
                {
                    uf.union(a, b);
                }
            }
        }
        let mut roots: Vec<usize> = boundary.iter().map(|&e| uf.find(e)).collect();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// The vertex-by-edge boundary matrix `d1` (head minus tail).
    pub fn edge_boundary_matrix(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zero(self.vertex_count, self.edges.len());
        for (e, edge) in self.edges.iter().enumerate() {
            *m.at_mut(edge.head, e) += BigInt::from(1);
            *m.at_mut(edge.tail, e) -= BigInt::from(1);
        }
        m
    }

    /// The face's image in the edge lattice: the coefficient of each edge in
    /// the attaching word.
    pub fn face_vector(&self) -> Vec<BigInt> {
        let mut f = vec![BigInt::zero(); self.edges.len()];
        for &(e, dir) in &self.face {
            f[e] += BigInt::from(i64::from(dir));
        }
        f
    }

    /// Index of the edge with the given name.
    pub fn edge_index(&self, name: &str) -> Result<usize> {
        self.edges
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| Error::Invalid(format!("no edge named '{name}'")))
    }

    /// First homology of the complex (marked points do not affect it).
    pub fn h1(&self) -> AbelianInvariants {
        let (_, relation) = self.kernel_data();
        let k = relation.cols();
        invariant_factors(&relation, k).expect("ambient equals kernel rank")
    }

    /// The class of a 1-cycle in first homology, in coordinates adapted to
    /// the group structure: free coordinates first, then one residue per
    /// invariant factor.
    ///
    /// The chain is given as `(edge name, coefficient)` pairs.
    ///
    /// # Errors
    /// Fails with [`Error::NotACycle`] if the chain has nonzero boundary,
    /// or a generic error for unknown edge names.
    pub fn cycle_class(&self, chain: &[(String, i64)]) -> Result<CycleClass> {
        let mut z = vec![BigInt::zero(); self.edges.len()];
        for (name, coeff) in chain {
            let e = self.edge_index(name)?;
            z[e] += BigInt::from(*coeff);
        }
        // Boundary check.
        let mut at_vertex = vec![BigInt::zero(); self.vertex_count];
        for (e, edge) in self.edges.iter().enumerate() {
            at_vertex[edge.head] += &z[e];
            at_vertex[edge.tail] -= &z[e];
        }
        if let Some(v) = at_vertex.iter().position(|x| !x.is_zero()) {
            return Err(Error::NotACycle(v));
        }

        let (kernel_coords, relation) = self.kernel_data();
        let k = relation.cols();
        // Coordinates of z in the kernel basis.
        let mut zm = IntegerMatrix::zero(self.edges.len(), 1);
        for (i, x) in z.iter().enumerate() {
            *zm.at_mut(i, 0) = x.clone();
        }
        let y = &kernel_coords * &zm;
        let rank = self.edges.len() - k;
        let mut coords = IntegerMatrix::zero(k, 1);
        for i in 0..k {
            *coords.at_mut(i, 0) = y.at(rank + i, 0).clone();
        }

        // Diagonalize the relation row: from S = U*r*V it follows that
        // V^T carries the relation vector r^T to (+-d)e_1, so in V^T-
        // transformed coordinates the group splits into cyclic factors and
        // the class is read off coordinate-wise.
        let form = snf(&relation);
        let new_coords = &form.v.transpose() * &coords;
        let mut free = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..k {
            let d = if i < relation.rows() {
                form.s.at(i, i).clone()
            } else {
                BigInt::zero()
            };
            let c = new_coords.at(i, 0).clone();
            if d.is_zero() {
                free.push(c);
            } else if d > BigInt::from(1) {
                torsion.push(((c % &d) + &d) % &d);
            }
            // d == 1: the coordinate is killed entirely.
        }
        Ok(CycleClass { free, torsion })
    }

    /// Shared homology plumbing: the kernel-coordinate projection (the
    /// inverse of the Smith column certificate of `d1`) and the face
    /// relation written in the kernel basis (a `1 x k` row).
    fn kernel_data(&self) -> (IntegerMatrix, IntegerMatrix) {
        let d1 = self.edge_boundary_matrix();
        let form = snf(&d1);
        let rank = form.rank();
        let k = self.edges.len() - rank;
        let vinv = unimodular_inverse(&form.v).expect("certificate is unimodular");

        let f = self.face_vector();
        let mut fm = IntegerMatrix::zero(self.edges.len(), 1);
        for (i, x) in f.iter().enumerate() {
            *fm.at_mut(i, 0) = x.clone();
        }
        let y = &vinv * &fm;
        let mut relation = IntegerMatrix::zero(1, k);
        for i in 0..self.edges.len() {
            let c = y.at(i, 0);
            if i < rank {
                debug_assert!(c.is_zero(), "face image must lie in the cycle lattice");
            } else {
                *relation.at_mut(0, i - rank) = c.clone();
            }
        }
        (vinv, relation)
    }
}

/// A homology class in coordinates adapted to the group: integers for the
/// free part, one residue `0 <= r < d` per invariant factor `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleClass {
    pub free: Vec<BigInt>,
    pub torsion: Vec<BigInt>,
}

impl CycleClass {
    /// True for the zero class.
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(Zero::is_zero) && self.torsion.iter().all(Zero::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::polygon::build_polygon;

    fn complex(g: u32, s: u32, n: u32) -> CellComplex {
        glue(&build_polygon(SurfaceSpec::new(g, s, n).unwrap())).unwrap()
    }

    #[test]
    fn projective_plane() {
        let c = complex(1, 0, 0);
        assert_eq!(c.vertex_count(), 1);
        assert_eq!(c.edges().len(), 1);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(c.h1().to_string(), "Z/2");
    }

    #[test]
    fn klein_bottle() {
        let c = complex(2, 0, 0);
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.edges().len(), 3);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.h1().to_string(), "Z x Z/2");
    }

    #[test]
    fn moebius_band() {
        let c = complex(1, 1, 0);
        assert_eq!(c.euler_characteristic(), 0);
        assert_eq!(c.boundary_circles(), 1);
        assert_eq!(c.h1().to_string(), "Z");
    }

    #[test]
    fn counts_scale_with_genus_boundary_and_marks() {
        for g in 1..=6 {
            for s in 0..=2 {
                for n in 0..=2 {
                    let c = complex(g, s, n);
                    let expected_edges = if g == 1 { 1 } else { (2 * g - 1) as usize }
                        + n as usize
                        + 2 * s as usize;
                    assert_eq!(c.edges().len(), expected_edges, "edges at ({g},{s},{n})");
                    assert_eq!(
                        c.vertex_count(),
                        (g + n + s) as usize,
                        "vertices at ({g},{s},{n})"
                    );
                    assert_eq!(
                        c.euler_characteristic(),
                        2 - i64::from(g) - i64::from(s),
                        "chi at ({g},{s},{n})"
                    );
                    assert_eq!(c.boundary_circles(), s as usize, "circles at ({g},{s},{n})");
                    assert_eq!(c.marked_vertices().len(), n as usize);
                }
            }
        }
    }

    #[test]
    fn marked_points_are_isolated_classes() {
        let c = complex(3, 1, 2);
        let marked = c.marked_vertices();
        assert_eq!(marked.len(), 2);
        assert_ne!(marked[0], marked[1]);
        // A marked vertex belongs only to its own fold edge.
        for &m in marked {
            let touching: Vec<&Edge> = c
                .edges()
                .iter()
                .filter(|e| e.tail == m || e.head == m)
                .collect();
            assert_eq!(touching.len(), 1);
            assert!(touching[0].name.starts_with('v'));
        }
    }

    #[test]
    fn closed_homology_has_one_torsion_class() {
        for g in 2..=8 {
            let c = complex(g, 0, 0);
            let inv = c.h1();
            assert_eq!(inv.free_rank(), (g - 1) as usize);
            assert_eq!(inv.torsion().len(), 1);
            let expect = if g == 2 {
                "Z x Z/2".to_string()
            } else {
                format!("Z^{} x Z/2", g - 1)
            };
            assert_eq!(inv.to_string(), expect);
        }
        // With boundary the homology is free of rank g + s - 1.
        for g in 1..=5 {
            for s in 1..=3 {
                let inv = complex(g, s, 0).h1();
                assert_eq!(inv.free_rank(), (g + s - 1) as usize);
                assert!(inv.torsion().is_empty());
            }
        }
    }

    #[test]
    fn face_relation_is_twice_the_crosscap_cycle() {
        let c = complex(3, 0, 0);
        let f = c.face_vector();
        let coeff: Vec<i64> = c
            .edges()
            .iter()
            .zip(&f)
            .map(|(e, x)| {
                let v = i64::try_from(x).unwrap();
                match e.name.as_str() {
                    "a1" | "a2'" => assert_eq!(v, 2, "edge {}", e.name),
                    _ => assert_eq!(v, 0, "edge {}", e.name),
                }
                v
            })
            .collect();
        assert_eq!(coeff.iter().sum::<i64>(), 4);
    }

    #[test]
    fn orientability_word_test() {
        // The torus word is orientable; the crosscap square is not.
        let torus = [
            (Label::A(1), 1),
            (Label::A(2), 1),
            (Label::A(1), -1),
            (Label::A(2), -1),
        ];
        assert!(orientable_word(&torus));
        assert!(!orientable_word(&[(Label::A(1), 1), (Label::A(1), 1)]));
        for g in 1..=5 {
            for s in 0..=2 {
                let model = build_polygon(SurfaceSpec::new(g, s, 1).unwrap());
                assert!(!orientable_word(model.word()));
            }
        }
    }

    #[test]
    fn cycle_classes_in_closed_genus_three() {
        let c = complex(3, 0, 0);
        let chain = |pairs: &[(&str, i64)]| -> Vec<(String, i64)> {
            pairs.iter().map(|(n, k)| (n.to_string(), *k)).collect()
        };

        // a1 + a2' is the torsion class: nonzero, but twice it vanishes.
        let t = c.cycle_class(&chain(&[("a1", 1), ("a2'", 1)])).unwrap();
        assert!(t.free.iter().all(|x| x.is_zero()));
        assert_eq!(t.torsion, vec![BigInt::from(1)]);
        let t2 = c.cycle_class(&chain(&[("a1", 2), ("a2'", 2)])).unwrap();
        assert!(t2.is_zero());

        // A loop edge generates an infinite cyclic summand.
        let a1 = c.cycle_class(&chain(&[("a1", 1)])).unwrap();
        assert!(a1.free.iter().any(|x| !x.is_zero()));
        let double = c.cycle_class(&chain(&[("a1", 2)])).unwrap();
        let doubled: Vec<BigInt> = a1.free.iter().map(|x| x * 2).collect();
        assert_eq!(double.free, doubled);

        // Non-cycles are rejected.
        assert!(matches!(
            c.cycle_class(&chain(&[("a2", 1)])),
            Err(Error::NotACycle(_))
        ));
        assert!(matches!(
            c.cycle_class(&chain(&[("a1'", 1)])),
            Err(Error::NotACycle(_))
        ));
        assert!(c.cycle_class(&chain(&[("zz", 1)])).is_err());
    }

    #[test]
    fn glue_rejects_broken_structure() {
        let spec = SurfaceSpec::new(3, 0, 0).unwrap();
        let canonical = build_polygon(spec);

        // Flip one crosscap-block sign.
        let mut word = canonical.word().to_vec();
        word[0] = (Label::A(1), -1);
        let model = PolygonModel::new(spec, word).unwrap();
        assert!(glue(&model).is_err());

        // Tear a marked-point block apart.
        let spec = SurfaceSpec::new(2, 0, 1).unwrap();
        let mut word = build_polygon(spec).word().to_vec();
        // canonical: a1 a2 a1 [v1 v1^-1] a1 a2^-1 — move the v's apart.
        word.swap(3, 4);
        word.swap(4, 5);
        let model = PolygonModel::new(spec, word).unwrap();
        assert!(glue(&model).is_err());
    }

    #[test]
    fn glue_accepts_reordered_middle_blocks() {
        let spec = SurfaceSpec::new(3, 1, 1).unwrap();
        let canonical = build_polygon(spec);
        let word = canonical.word();
        // Swap [v1 v1^-1] and [v2 u1 v2^-1].
        let permuted: Vec<(Label, i8)> = word[..5]
            .iter()
            .copied()
            .chain(word[7..10].iter().copied())
            .chain(word[5..7].iter().copied())
            .chain(word[10..].iter().copied())
            .collect();
        let model = PolygonModel::new(spec, permuted).unwrap();
        let (a, b) = (glue(&canonical).unwrap(), glue(&model).unwrap());
        assert_eq!(a.euler_characteristic(), b.euler_characteristic());
        assert_eq!(a.boundary_circles(), b.boundary_circles());
        assert_eq!(a.h1(), b.h1());
    }
}
