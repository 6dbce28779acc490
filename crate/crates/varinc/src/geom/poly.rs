//! Convex polyhedra `{ z : A z <= b, E z = c }` in exact rational arithmetic.
//!
//! Emptiness, membership, projection and interior points are all decided by
//! Fourier–Motzkin elimination with pairwise redundancy pruning — no LP
//! solver anywhere. Constraint rows are kept in a canonical form (primitive
//! integer scaling, deduplication, sorted order) so that equal inputs produce
//! identical serializations.

use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::linalg;
use crate::rat::{fmt_rat, primitive_rat, Rat};
use crate::{Error, Result};

/// One linear row: `coeffs . z (<=|=) rhs` depending on where it is stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinCon {
    pub coeffs: Vec<Rat>,
    pub rhs: Rat,
}

impl LinCon {
    pub fn new(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        LinCon { coeffs, rhs }
    }

    fn full_row(&self) -> Vec<Rat> {
        let mut v = self.coeffs.clone();
        v.push(self.rhs.clone());
        v
    }

    fn from_full_row(mut v: Vec<Rat>) -> Self {
        let rhs = v.pop().expect("row with rhs");
        LinCon { coeffs: v, rhs }
    }

    /// Positive primitive scaling (direction preserved).
    fn normalized(&self) -> Self {
        LinCon::from_full_row(primitive_rat(&self.full_row()))
    }

    /// Primitive scaling with the first nonzero coefficient positive
    /// (for rows meaningful only up to sign).
    fn sign_normalized(&self) -> Self {
        let mut ints = crate::rat::primitive_scale(&self.full_row());
        // only coefficient signs matter for orientation, not the rhs
        let lead = ints[..ints.len() - 1].iter().find(|x| !x.is_zero());
        if let Some(l) = lead {
            if l.is_negative() {
                for x in ints.iter_mut() {
                    *x = -x.clone();
                }
            }
        } else if ints[ints.len() - 1].is_negative() {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
        LinCon::from_full_row(ints.into_iter().map(Rat::from_integer).collect())
    }

    fn is_zero_coeffs(&self) -> bool {
        linalg::is_zero_vec(&self.coeffs)
    }
}

/// Closed convex polyhedron with cached emptiness.
#[derive(Debug, Clone)]
pub struct Polyhedron {
    dim: usize,
    ineqs: Vec<LinCon>,
    eqs: Vec<LinCon>,
    empty: OnceLock<bool>,
}

impl PartialEq for Polyhedron {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.ineqs == other.ineqs && self.eqs == other.eqs
    }
}
impl Eq for Polyhedron {}

impl PartialOrd for Polyhedron {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Polyhedron {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.dim, &self.eqs, &self.ineqs).cmp(&(other.dim, &other.eqs, &other.ineqs))
    }
}

/// Outcome of syntactic row cleanup.
enum Cleaned {
    Rows { ineqs: Vec<LinCon>, eqs: Vec<LinCon> },
    Infeasible,
}

fn clean_rows(dim: usize, ineqs: Vec<LinCon>, eqs: Vec<LinCon>) -> Cleaned {
    let mut out_ineq: Vec<LinCon> = Vec::with_capacity(ineqs.len());
    for c in ineqs {
        assert_eq!(c.coeffs.len(), dim, "inequality row width");
        if c.is_zero_coeffs() {
            if c.rhs.is_negative() {
                return Cleaned::Infeasible;
            }
            continue; // 0 <= b, b >= 0: trivial
        }
        out_ineq.push(c.normalized());
    }
    let mut out_eq: Vec<LinCon> = Vec::with_capacity(eqs.len());
    for c in eqs {
        assert_eq!(c.coeffs.len(), dim, "equality row width");
        if c.is_zero_coeffs() {
            if !c.rhs.is_zero() {
                return Cleaned::Infeasible;
            }
            continue;
        }
        out_eq.push(c.sign_normalized());
    }
    // sort, dedupe, and prune pairwise-dominated inequalities (same direction,
    // larger rhs) and contradictory equality pairs (same direction, different rhs)
    out_ineq.sort();
    out_ineq.dedup();
    let mut pruned: Vec<LinCon> = Vec::with_capacity(out_ineq.len());
    for c in out_ineq {
        if let Some(last) = pruned.last() {
            if last.coeffs == c.coeffs {
                continue; // sorted: last.rhs <= c.rhs, c is dominated
            }
        }
        pruned.push(c);
    }
    out_eq.sort();
    out_eq.dedup();
    for w in out_eq.windows(2) {
        if w[0].coeffs == w[1].coeffs {
            return Cleaned::Infeasible; // same hyperplane direction, two offsets
        }
    }
    Cleaned::Rows { ineqs: pruned, eqs: out_eq }
}

impl Polyhedron {
    /// Build from rows; rows are canonicalized (scaled, deduplicated,
    /// sorted). A syntactically contradictory system collapses to the
    /// canonical empty polyhedron.
    pub fn new(dim: usize, ineqs: Vec<LinCon>, eqs: Vec<LinCon>) -> Self {
        match clean_rows(dim, ineqs, eqs) {
            Cleaned::Rows { ineqs, eqs } => Polyhedron {
                dim,
                ineqs,
                eqs,
                empty: OnceLock::new(),
            },
            Cleaned::Infeasible => Self::empty_set(dim),
        }
    }

    /// The canonical empty polyhedron `{ z : 0 <= -1 }`.
    pub fn empty_set(dim: usize) -> Self {
        let p = Polyhedron {
            dim,
            ineqs: vec![LinCon::new(linalg::zeros(dim), -Rat::one())],
            eqs: Vec::new(),
            empty: OnceLock::new(),
        };
        let _ = p.empty.set(true);
        p
    }

    /// All of `R^dim`.
    pub fn full_space(dim: usize) -> Self {
        Polyhedron {
            dim,
            ineqs: Vec::new(),
            eqs: Vec::new(),
            empty: OnceLock::new(),
        }
    }

    /// The single point `{ z }`.
    pub fn point(z: &[Rat]) -> Self {
        let dim = z.len();
        let eqs = (0..dim)
            .map(|i| LinCon::new(linalg::unit(dim, i), z[i].clone()))
            .collect();
        Polyhedron::new(dim, Vec::new(), eqs)
    }

    /// Axis-aligned box `{ z : |z_i - center_i| <= radius }`.
    pub fn boxed(center: &[Rat], radius: &Rat) -> Self {
        let dim = center.len();
        let mut ineqs = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            ineqs.push(LinCon::new(linalg::unit(dim, i), &center[i] + radius));
            ineqs.push(LinCon::new(
                linalg::neg(&linalg::unit(dim, i)),
                radius - &center[i],
            ));
        }
        Polyhedron::new(dim, ineqs, Vec::new())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ineqs(&self) -> &[LinCon] {
        &self.ineqs
    }

    pub fn eqs(&self) -> &[LinCon] {
        &self.eqs
    }

    /// Exact membership.
    pub fn contains(&self, z: &[Rat]) -> bool {
        assert_eq!(z.len(), self.dim, "point dimension");
        self.ineqs.iter().all(|c| linalg::dot(&c.coeffs, z) <= c.rhs)
            && self.eqs.iter().all(|c| linalg::dot(&c.coeffs, z) == c.rhs)
    }

    /// Exact emptiness, decided by elimination to dimension zero and cached.
    pub fn is_empty(&self) -> bool {
        *self
            .empty
            .get_or_init(|| System::from_poly(self).feasible_point().is_none())
    }

    /// A point in the relative interior, if the set is nonempty.
    pub fn interior_point(&self) -> Option<Vec<Rat>> {
        System::from_poly(self).feasible_point()
    }

    /// Intersection (concatenate rows).
    pub fn intersect(&self, other: &Polyhedron) -> Polyhedron {
        assert_eq!(self.dim, other.dim, "intersect dimension");
        let mut ineqs = self.ineqs.clone();
        ineqs.extend(other.ineqs.iter().cloned());
        let mut eqs = self.eqs.clone();
        eqs.extend(other.eqs.iter().cloned());
        Polyhedron::new(self.dim, ineqs, eqs)
    }

    /// Add one inequality row.
    pub fn with_ineq(&self, c: LinCon) -> Polyhedron {
        let mut ineqs = self.ineqs.clone();
        ineqs.push(c);
        Polyhedron::new(self.dim, ineqs, self.eqs.clone())
    }

    /// Add one equality row.
    pub fn with_eq(&self, c: LinCon) -> Polyhedron {
        let mut eqs = self.eqs.clone();
        eqs.push(c);
        Polyhedron::new(self.dim, self.ineqs.clone(), eqs)
    }

    /// Orthogonal projection onto the listed coordinates (in the listed
    /// order): eliminate the complement by Fourier–Motzkin, then reindex.
    pub fn project(&self, coords: &[usize]) -> Result<Polyhedron> {
        for &c in coords {
            if c >= self.dim {
                return Err(Error::Dimension(format!(
                    "projection coordinate {c} out of range for dimension {}",
                    self.dim
                )));
            }
        }
        let keep: std::collections::BTreeSet<usize> = coords.iter().copied().collect();
        if keep.len() != coords.len() {
            return Err(Error::Dimension("repeated projection coordinate".into()));
        }
        let mut sys = System::from_poly(self);
        for j in (0..self.dim).filter(|j| !keep.contains(j)) {
            if !sys.eliminate(j) {
                return Ok(Polyhedron::empty_set(coords.len()));
            }
        }
        Ok(sys.extract(coords))
    }

    /// Substitute fixed values for the given coordinates; the result lives on
    /// the remaining coordinates in their original order.
    pub fn substitute(&self, fixed: &[(usize, Rat)]) -> Polyhedron {
        let fixed_idx: std::collections::BTreeMap<usize, &Rat> =
            fixed.iter().map(|(i, v)| (*i, v)).collect();
        assert_eq!(fixed_idx.len(), fixed.len(), "repeated substitution index");
        let rest: Vec<usize> = (0..self.dim).filter(|i| !fixed_idx.contains_key(i)).collect();
        let reduce = |c: &LinCon| -> LinCon {
            let mut rhs = c.rhs.clone();
            for (&i, v) in &fixed_idx {
                rhs -= &c.coeffs[i] * *v;
            }
            LinCon::new(rest.iter().map(|&i| c.coeffs[i].clone()).collect(), rhs)
        };
        Polyhedron::new(
            rest.len(),
            self.ineqs.iter().map(reduce).collect(),
            self.eqs.iter().map(reduce).collect(),
        )
    }

    /// Reorder coordinates: new coordinate `j` is old coordinate `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> Polyhedron {
        assert_eq!(perm.len(), self.dim, "permutation length");
        let remap = |c: &LinCon| {
            LinCon::new(
                perm.iter().map(|&old| c.coeffs[old].clone()).collect(),
                c.rhs.clone(),
            )
        };
        Polyhedron::new(
            self.dim,
            self.ineqs.iter().map(remap).collect(),
            self.eqs.iter().map(remap).collect(),
        )
    }

    /// Product embedding into `R^(left + dim + right)`, own coordinates at
    /// offset `left`, the rest unconstrained.
    pub fn embed(&self, left: usize, right: usize) -> Polyhedron {
        let dim = left + self.dim + right;
        let pad = |c: &LinCon| {
            let mut row = linalg::zeros(dim);
            row[left..left + self.dim].clone_from_slice(&c.coeffs);
            LinCon::new(row, c.rhs.clone())
        };
        Polyhedron::new(
            dim,
            self.ineqs.iter().map(pad).collect(),
            self.eqs.iter().map(pad).collect(),
        )
    }

    /// Translate by `v`.
    pub fn translate(&self, v: &[Rat]) -> Polyhedron {
        assert_eq!(v.len(), self.dim);
        let shift = |c: &LinCon| {
            LinCon::new(c.coeffs.clone(), &c.rhs + linalg::dot(&c.coeffs, v))
        };
        Polyhedron::new(
            self.dim,
            self.ineqs.iter().map(shift).collect(),
            self.eqs.iter().map(shift).collect(),
        )
    }

    /// Homogenization: the cone `{ (z, t) : A z <= b t, E z = c t, t >= 0 }`
    /// in dimension `dim + 1` (`t` last). Slicing it at `t = 1` recovers the
    /// polyhedron; its `t = 0` slice is the recession cone.
    pub fn homogenize(&self) -> Polyhedron {
        let d = self.dim + 1;
        let lift = |c: &LinCon| {
            let mut row = c.coeffs.clone();
            row.push(-c.rhs.clone());
            LinCon::new(row, Rat::zero())
        };
        let mut ineqs: Vec<LinCon> = self.ineqs.iter().map(lift).collect();
        let mut t_row = linalg::zeros(d);
        t_row[self.dim] = -Rat::one();
        ineqs.push(LinCon::new(t_row, Rat::zero())); // t >= 0
        Polyhedron::new(d, ineqs, self.eqs.iter().map(lift).collect())
    }

    /// True when every row is homogeneous (the set is a cone with apex 0,
    /// possibly empty).
    pub fn is_cone(&self) -> bool {
        self.ineqs.iter().all(|c| c.rhs.is_zero()) && self.eqs.iter().all(|c| c.rhs.is_zero())
    }

    /// Exact range of coordinate `i`: `(lower, upper)`, `None` = unbounded
    /// on that side. Errors only propagate dimension misuse; an empty set
    /// yields `(Some(0), Some(-1))`-style inverted bounds — callers should
    /// check emptiness first.
    pub fn coord_interval(&self, i: usize) -> Result<(Option<Rat>, Option<Rat>)> {
        let p = self.project(&[i])?;
        if p.is_empty() {
            return Err(Error::Precondition("coordinate range of empty set".into()));
        }
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for c in p.eqs() {
            let v = &c.rhs / &c.coeffs[0];
            lo = Some(v.clone());
            hi = Some(v);
        }
        for c in p.ineqs() {
            let a = &c.coeffs[0];
            if a.is_zero() {
                continue;
            }
            let v = &c.rhs / a;
            if a.is_positive() {
                hi = Some(hi.map_or(v.clone(), |h| h.min(v)));
            } else {
                lo = Some(lo.map_or(v.clone(), |l| l.max(v)));
            }
        }
        Ok((lo, hi))
    }

    /// Canonical one-piece serialization (also the union ordering key).
    pub fn canonical_text(&self) -> String {
        let mut s = String::from("piece\n");
        for c in &self.eqs {
            s.push_str("eq ");
            for x in &c.coeffs {
                s.push_str(&fmt_rat(x));
                s.push(' ');
            }
            s.push_str(&fmt_rat(&c.rhs));
            s.push('\n');
        }
        for c in &self.ineqs {
            s.push_str("ineq ");
            for x in &c.coeffs {
                s.push_str(&fmt_rat(x));
                s.push(' ');
            }
            s.push_str(&fmt_rat(&c.rhs));
            s.push('\n');
        }
        s.push_str("end\n");
        s
    }
}

/// Working copy of a constraint system during elimination.
struct System {
    dim: usize,
    /// live columns; eliminated columns are zeroed everywhere
    live: Vec<bool>,
    ineqs: Vec<LinCon>,
    eqs: Vec<LinCon>,
    infeasible: bool,
}

impl System {
    fn from_poly(p: &Polyhedron) -> System {
        System {
            dim: p.dim,
            live: vec![true; p.dim],
            ineqs: p.ineqs.clone(),
            eqs: p.eqs.clone(),
            infeasible: false,
        }
    }

    /// Normalize rows, drop trivial ones, detect contradictions.
    fn cleanup(&mut self) {
        match clean_rows(
            self.dim,
            std::mem::take(&mut self.ineqs),
            std::mem::take(&mut self.eqs),
        ) {
            Cleaned::Rows { ineqs, eqs } => {
                self.ineqs = ineqs;
                self.eqs = eqs;
            }
            Cleaned::Infeasible => self.infeasible = true,
        }
    }

    /// Eliminate variable `j`. Returns false when the system became
    /// syntactically infeasible.
    fn eliminate(&mut self, j: usize) -> bool {
        if self.infeasible {
            return false;
        }
        debug_assert!(self.live[j]);
        self.live[j] = false;
        if let Some(pi) = self.eqs.iter().position(|c| !c.coeffs[j].is_zero()) {
            // pivot on an equality: substitute z_j everywhere
            let pivot = self.eqs.swap_remove(pi);
            let pj = pivot.coeffs[j].clone();
            let subst = |c: &LinCon| -> LinCon {
                let f = &c.coeffs[j] / &pj;
                if f.is_zero() {
                    return c.clone();
                }
                let coeffs = linalg::sub(&c.coeffs, &linalg::scale(&pivot.coeffs, &f));
                LinCon::new(coeffs, &c.rhs - &pivot.rhs * &f)
            };
            self.ineqs = self.ineqs.iter().map(subst).collect();
            self.eqs = self.eqs.iter().map(subst).collect();
        } else {
            // Fourier–Motzkin on the inequalities
            let mut zero_rows = Vec::new();
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            for c in std::mem::take(&mut self.ineqs) {
                match c.coeffs[j].cmp(&Rat::zero()) {
                    Ordering::Equal => zero_rows.push(c),
                    Ordering::Greater => pos.push(c),
                    Ordering::Less => neg.push(c),
                }
            }
            for p in &pos {
                for n in &neg {
                    // positive combination cancelling column j
                    let a = &p.coeffs[j];
                    let b = &n.coeffs[j]; // b < 0
                    let coeffs = linalg::add(
                        &linalg::scale(&p.coeffs, &-b.clone()),
                        &linalg::scale(&n.coeffs, a),
                    );
                    let rhs = &p.rhs * (-b.clone()) + &n.rhs * a;
                    zero_rows.push(LinCon::new(coeffs, rhs));
                }
            }
            self.ineqs = zero_rows;
        }
        self.cleanup();
        !self.infeasible
    }

    /// Project the finished system onto the listed (live) columns.
    fn extract(&self, coords: &[usize]) -> Polyhedron {
        if self.infeasible {
            return Polyhedron::empty_set(coords.len());
        }
        let take = |c: &LinCon| {
            LinCon::new(
                coords.iter().map(|&i| c.coeffs[i].clone()).collect(),
                c.rhs.clone(),
            )
        };
        Polyhedron::new(
            coords.len(),
            self.ineqs.iter().map(take).collect(),
            self.eqs.iter().map(take).collect(),
        )
    }

    /// A relative-interior point of the represented set, or `None` if empty.
    ///
    /// Equalities are removed by Gaussian pivots, the inequality system is
    /// eliminated one variable at a time with every intermediate level saved,
    /// and the point is rebuilt backwards choosing fiber midpoints (interior
    /// wherever the fiber has width).
    fn feasible_point(mut self) -> Option<Vec<Rat>> {
        self.cleanup();
        if self.infeasible {
            return None;
        }
        let order: Vec<usize> = (0..self.dim).filter(|&j| self.live[j]).collect();
        // substitutions from equality pivots, applied in reverse at the end
        let mut pivots: Vec<(usize, LinCon)> = Vec::new();
        let mut levels: Vec<(usize, Vec<LinCon>)> = Vec::new();
        for &j in &order {
            if self.infeasible {
                return None;
            }
            if let Some(pi) = self.eqs.iter().position(|c| !c.coeffs[j].is_zero()) {
                let pivot = self.eqs.swap_remove(pi);
                let pj = pivot.coeffs[j].clone();
                let subst = |c: &LinCon| -> LinCon {
                    let f = &c.coeffs[j] / &pj;
                    if f.is_zero() {
                        return c.clone();
                    }
                    LinCon::new(
                        linalg::sub(&c.coeffs, &linalg::scale(&pivot.coeffs, &f)),
                        &c.rhs - &pivot.rhs * &f,
                    )
                };
                self.ineqs = self.ineqs.iter().map(subst).collect();
                self.eqs = self.eqs.iter().map(subst).collect();
                pivots.push((j, pivot));
                self.cleanup();
            } else {
                levels.push((j, self.ineqs.clone()));
                self.live[j] = false;
                let mut zero_rows = Vec::new();
                let mut pos: Vec<LinCon> = Vec::new();
                let mut neg: Vec<LinCon> = Vec::new();
                for c in std::mem::take(&mut self.ineqs) {
                    match c.coeffs[j].cmp(&Rat::zero()) {
                        Ordering::Equal => zero_rows.push(c),
                        Ordering::Greater => pos.push(c),
                        Ordering::Less => neg.push(c),
                    }
                }
                for p in &pos {
                    for n in &neg {
                        let a = &p.coeffs[j];
                        let b = &n.coeffs[j];
                        let coeffs = linalg::add(
                            &linalg::scale(&p.coeffs, &-b.clone()),
                            &linalg::scale(&n.coeffs, a),
                        );
                        zero_rows.push(LinCon::new(coeffs, &p.rhs * (-b.clone()) + &n.rhs * a));
                    }
                }
                self.ineqs = zero_rows;
                self.cleanup();
            }
        }
        if self.infeasible || !self.eqs.is_empty() {
            return if self.infeasible { None } else { None };
        }
        let mut z = linalg::zeros(self.dim);
        for (j, rows) in levels.iter().rev() {
            let mut lo: Option<Rat> = None;
            let mut hi: Option<Rat> = None;
            for c in rows {
                let a = &c.coeffs[*j];
                if a.is_zero() {
                    continue;
                }
                // a * z_j <= rhs - (other coords already fixed)
                let mut rest = c.rhs.clone();
                for (i, x) in c.coeffs.iter().enumerate() {
                    if i != *j && !x.is_zero() {
                        rest -= x * &z[i];
                    }
                }
                let bound = &rest / a;
                if a.is_positive() {
                    hi = Some(hi.map_or(bound.clone(), |h: Rat| h.min(bound)));
                } else {
                    lo = Some(lo.map_or(bound.clone(), |l: Rat| l.max(bound)));
                }
            }
            z[*j] = match (lo, hi) {
                (Some(l), Some(h)) => {
                    if l > h {
                        return None;
                    }
                    (&l + &h) / crate::rat::rint(2)
                }
                (Some(l), None) => l + Rat::one(),
                (None, Some(h)) => h - Rat::one(),
                (None, None) => Rat::zero(),
            };
        }
        for (j, pivot) in pivots.iter().rev() {
            // pivot row: coeffs . z = rhs with coeffs[j] != 0
            let mut rest = pivot.rhs.clone();
            for (i, x) in pivot.coeffs.iter().enumerate() {
                if i != *j && !x.is_zero() {
                    rest -= x * &z[i];
                }
            }
            z[*j] = rest / &pivot.coeffs[*j];
        }
        Some(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rint(x)).collect()
    }

    fn square() -> Polyhedron {
        // [0,1]^2
        Polyhedron::new(
            2,
            vec![
                LinCon::new(r(&[1, 0]), rint(1)),
                LinCon::new(r(&[-1, 0]), rint(0)),
                LinCon::new(r(&[0, 1]), rint(1)),
                LinCon::new(r(&[0, -1]), rint(0)),
            ],
            vec![],
        )
    }

    #[test]
    fn membership_and_emptiness() {
        let s = square();
        assert!(s.contains(&[rat(1, 2), rat(1, 2)]));
        assert!(s.contains(&[rint(1), rint(0)]));
        assert!(!s.contains(&[rint(2), rint(0)]));
        assert!(!s.is_empty());
        let e = s.intersect(&Polyhedron::new(
            2,
            vec![LinCon::new(r(&[1, 0]), rint(-1))],
            vec![],
        ));
        assert!(e.is_empty());
        assert!(Polyhedron::empty_set(3).is_empty());
        assert!(!Polyhedron::full_space(0).is_empty());
        assert!(Polyhedron::full_space(2).contains(&[rint(5), rint(-7)]));
    }

    #[test]
    fn canonical_rows_dedupe_and_dominate() {
        // 2x <= 4 and x <= 2 are the same row after scaling; x <= 3 is dominated
        let p = Polyhedron::new(
            1,
            vec![
                LinCon::new(vec![rint(2)], rint(4)),
                LinCon::new(vec![rint(1)], rint(2)),
                LinCon::new(vec![rint(1)], rint(3)),
            ],
            vec![],
        );
        assert_eq!(p.ineqs().len(), 1);
        assert_eq!(p.ineqs()[0], LinCon::new(vec![rint(1)], rint(2)));
    }

    #[test]
    fn inconsistent_equalities_collapse() {
        let p = Polyhedron::new(
            1,
            vec![],
            vec![
                LinCon::new(vec![rint(1)], rint(0)),
                LinCon::new(vec![rint(2)], rint(2)),
            ],
        );
        assert!(p.is_empty());
        assert_eq!(p, Polyhedron::empty_set(1));
    }

    #[test]
    fn projection_shadow() {
        // triangle x >= 0, y >= 0, x + y <= 1 projected to x is [0,1]
        let t = Polyhedron::new(
            2,
            vec![
                LinCon::new(r(&[-1, 0]), rint(0)),
                LinCon::new(r(&[0, -1]), rint(0)),
                LinCon::new(r(&[1, 1]), rint(1)),
            ],
            vec![],
        );
        let px = t.project(&[0]).unwrap();
        assert_eq!(px.coord_interval(0).unwrap(), (Some(rint(0)), Some(rint(1))));
        // projection is monotone: a subset projects into the shadow
        let small = t.intersect(&Polyhedron::new(
            2,
            vec![LinCon::new(r(&[1, 0]), rat(1, 2))],
            vec![],
        ));
        let ps = small.project(&[0]).unwrap();
        assert_eq!(ps.coord_interval(0).unwrap(), (Some(rint(0)), Some(rat(1, 2))));
    }

    #[test]
    fn projection_with_equalities() {
        // line x = y in the square, projected to y: [0,1]
        let p = square().with_eq(LinCon::new(r(&[1, -1]), rint(0)));
        let py = p.project(&[1]).unwrap();
        assert_eq!(py.coord_interval(0).unwrap(), (Some(rint(0)), Some(rint(1))));
    }

    #[test]
    fn interior_points_hit_relative_interior() {
        let s = square();
        let z = s.interior_point().unwrap();
        assert!(s.contains(&z));
        for c in s.ineqs() {
            assert!(linalg::dot(&c.coeffs, &z) < c.rhs, "strictly inside facets");
        }
        // a segment: relative interior point must avoid the endpoints
        let seg = Polyhedron::new(
            2,
            vec![
                LinCon::new(r(&[1, 0]), rint(1)),
                LinCon::new(r(&[-1, 0]), rint(0)),
            ],
            vec![LinCon::new(r(&[0, 1]), rint(0))],
        );
        let z = seg.interior_point().unwrap();
        assert!(seg.contains(&z));
        assert!(z[0] > rint(0) && z[0] < rint(1));
        assert_eq!(z[1], rint(0));
        assert_eq!(Polyhedron::empty_set(2).interior_point(), None);
        // single point
        let pt = Polyhedron::point(&[rat(1, 3), rint(-2)]);
        assert_eq!(pt.interior_point().unwrap(), vec![rat(1, 3), rint(-2)]);
    }

    #[test]
    fn substitution_and_permutation() {
        let s = square();
        let slice = s.substitute(&[(0, rat(1, 2))]);
        assert_eq!(slice.dim(), 1);
        assert_eq!(slice.coord_interval(0).unwrap(), (Some(rint(0)), Some(rint(1))));
        let gone = s.substitute(&[(0, rint(5))]);
        assert!(gone.is_empty());
        let tri = Polyhedron::new(
            2,
            vec![
                LinCon::new(r(&[-1, 0]), rint(0)),
                LinCon::new(r(&[1, 1]), rint(1)),
            ],
            vec![],
        );
        let swapped = tri.permute(&[1, 0]);
        assert!(swapped.contains(&[rint(1), rint(0)]));
        assert!(!swapped.contains(&[rint(0), rint(1)]) || tri.contains(&[rint(1), rint(0)]));
    }

    #[test]
    fn homogenization_is_a_cone() {
        let s = square();
        let h = s.homogenize();
        assert!(h.is_cone());
        assert!(h.contains(&[rat(1, 2), rat(1, 2), rint(1)]));
        assert!(h.contains(&[rint(0), rint(0), rint(0)]));
        assert!(!h.contains(&[rint(0), rint(1), rint(-1)]));
    }

    #[test]
    fn unbounded_coordinate_ranges() {
        let half = Polyhedron::new(1, vec![LinCon::new(vec![rint(-1)], rint(0))], vec![]);
        assert_eq!(half.coord_interval(0).unwrap(), (Some(rint(0)), None));
    }

    #[test]
    fn canonical_text_is_stable() {
        let a = square();
        let b = Polyhedron::new(
            2,
            vec![
                LinCon::new(r(&[0, -1]), rint(0)),
                LinCon::new(r(&[0, 2]), rint(2)),
                LinCon::new(r(&[-3, 0]), rint(0)),
                LinCon::new(r(&[1, 0]), rint(1)),
            ],
            vec![],
        );
        assert_eq!(a, b);
        assert_eq!(a.canonical_text(), b.canonical_text());
    }
}
