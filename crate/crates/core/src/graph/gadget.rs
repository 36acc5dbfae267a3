//! Lower-bound gadget families.
//!
//! * `StLower` – vertices `u = 0`, `w = 1`, `v_i = i + 1` for `i = 1..=b`;
//!   edge `u–v_i` iff `X_i = 1`, edge `v_i–w` iff `Y_i = 1`.
//! * `StVerify` – vertices `u_j = j`, `v_j = b + 1 + j` for `j = 0..=b`;
//!   `u_0–u_i` iff `x_i = 1`, `v_0–v_i` iff `y_i = 0`, rungs `u_j–v_j`.
//!   A spanning tree exactly when `x = y`.
//! * `Conn` – same vertices; `u_0–u_i` iff `x_i = 0`, `v_0–v_i` iff
//!   `y_i = 0`, rungs. Connected exactly when `x` and `y` are disjoint.
//!
//! Bit vectors are 0-indexed in code: `x[i - 1]` is `x_i`.

use rand::Rng;

use super::{Edge, Graph, GraphError};
use crate::rng::{rng_for, stream};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetKind {
    StLower,
    StVerify,
    Conn,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub kind: GadgetKind,
    pub b: usize,
    pub x: Vec<bool>,
    pub y: Vec<bool>,
}

impl GadgetSpec {
    pub fn new(kind: GadgetKind, x: Vec<bool>, y: Vec<bool>) -> Result<Self, GraphError> {
        let spec = GadgetSpec {
            kind,
            b: x.len(),
            x,
            y,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        if self.x.len() != self.b || self.y.len() != self.b {
            return Err(GraphError::GadgetLength {
                b: self.b,
                x: self.x.len(),
                y: self.y.len(),
            });
        }
        if self.kind == GadgetKind::StLower {
            if let Some(i) = (0..self.b).find(|&i| !self.x[i] && !self.y[i]) {
                return Err(GraphError::GadgetSupport(i + 1));
            }
        }
        Ok(())
    }

    /// Vertex count of the generated graph.
    pub fn n(&self) -> usize {
        match self.kind {
            GadgetKind::StLower => self.b + 2,
            GadgetKind::StVerify | GadgetKind::Conn => 2 * (self.b + 1),
        }
    }

    /// The feasibility predicate predicted from the bit vectors alone:
    /// `x = y` for `StVerify`, disjointness for `Conn`, and for `StLower`
    /// connectivity, which holds iff some `i` has `X_i = Y_i = 1`.
    pub fn predicted(&self) -> bool {
        match self.kind {
            GadgetKind::StVerify => self.x == self.y,
            GadgetKind::Conn => !self.x.iter().zip(&self.y).any(|(&a, &b)| a && b),
            GadgetKind::StLower => self.x.iter().zip(&self.y).any(|(&a, &b)| a && b),
        }
    }
}

/// Samples `(X, Y)` uniformly among the `3^b` pairs with `X_i + Y_i ≥ 1`.
pub fn random_admissible(b: usize, seed: u64) -> GadgetSpec {
    let mut rng = rng_for(seed, stream::GADGET, b as u64);
    let mut x = Vec::with_capacity(b);
    let mut y = Vec::with_capacity(b);
    for _ in 0..b {
        let (a, c) = match rng.gen_range(0..3) {
            0 => (true, false),
            1 => (false, true),
            _ => (true, true),
        };
        x.push(a);
        y.push(c);
    }
    GadgetSpec {
        kind: GadgetKind::StLower,
        b,
        x,
        y,
    }
}

/// A random instance of `kind` whose predicate holds with probability
/// about one half. `StLower` instances are [`random_admissible`].
pub fn random_gadget(kind: GadgetKind, b: usize, seed: u64) -> GadgetSpec {
    if kind == GadgetKind::StLower {
        return random_admissible(b, seed);
    }
    let mut rng = rng_for(seed, stream::GADGET, (b as u64) << 2 | kind as u64);
    let x: Vec<bool> = (0..b).map(|_| rng.gen_bool(0.5)).collect();
    let want_yes = rng.gen_bool(0.5);
    let y = match kind {
        GadgetKind::StVerify => {
            let mut y = x.clone();
            if !want_yes && b > 0 {
                let i = rng.gen_range(0..b);
                y[i] = !y[i];
            }
            y
        }
        _ => {
            let mut y: Vec<bool> = x.iter().map(|&a| !a && rng.gen_bool(0.5)).collect();
            let ones: Vec<usize> = (0..b).filter(|&i| x[i]).collect();
            if !want_yes && !ones.is_empty() {
                y[ones[rng.gen_range(0..ones.len())]] = true;
            }
            y
        }
    };
    GadgetSpec { kind, b, x, y }
}

pub fn generate_gadget(spec: &GadgetSpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let b = spec.b;
    let mut edges = Vec::new();
    let mut push = |a: usize, c: usize| {
        edges.push(Edge {
            u: a.min(c),
            v: a.max(c),
            w: 1,
        })
    };
    match spec.kind {
        GadgetKind::StLower => {
            let (u, w) = (0, 1);
            for i in 1..=b {
                if spec.x[i - 1] {
                    push(u, i + 1);
                }
                if spec.y[i - 1] {
                    push(i + 1, w);
                }
            }
        }
        GadgetKind::StVerify | GadgetKind::Conn => {
            let uj = |j: usize| j;
            let vj = |j: usize| b + 1 + j;
            let hub_u = |i: usize| match spec.kind {
                GadgetKind::StVerify => spec.x[i - 1],
                _ => !spec.x[i - 1],
            };
            for i in 1..=b {
                if hub_u(i) {
                    push(uj(0), uj(i));
                }
                if !spec.y[i - 1] {
                    push(vj(0), vj(i));
                }
            }
            for j in 0..=b {
                push(uj(j), vj(j));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(spec.n(), edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Union-find free connectivity check by DFS; independent of the crate's
    /// algorithm code.
    fn components(g: &Graph) -> usize {
        let mut seen = vec![false; g.n()];
        let mut count = 0;
        for s in 0..g.n() {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for inc in g.adj(v) {
                    if !seen[inc.nbr] {
                        seen[inc.nbr] = true;
                        stack.push(inc.nbr);
                    }
                }
            }
        }
        count
    }

    fn bits(mask: usize, b: usize) -> Vec<bool> {
        (0..b).map(|i| mask >> i & 1 == 1).collect()
    }

    #[test]
    fn stverify_equal_inputs_give_spanning_tree() {
        let spec = GadgetSpec::new(GadgetKind::StVerify, vec![true, false], vec![true, false])
            .unwrap();
        let g = generate_gadget(&spec).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), g.n() - 1);
        assert_eq!(components(&g), 1);
    }

    #[test]
    fn conn_intersecting_is_disconnected() {
        let spec = GadgetSpec::new(GadgetKind::Conn, vec![true], vec![true]).unwrap();
        let g = generate_gadget(&spec).unwrap();
        assert!(components(&g) > 1);
    }

    #[test]
    fn st_lower_counts() {
        let spec = GadgetSpec::new(GadgetKind::StLower, vec![true; 3], vec![true; 3]).unwrap();
        let g = generate_gadget(&spec).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn st_lower_support_condition() {
        assert_eq!(
            GadgetSpec::new(GadgetKind::StLower, vec![true, false], vec![false, false]),
            Err(GraphError::GadgetSupport(2))
        );
        assert!(matches!(
            GadgetSpec::new(GadgetKind::Conn, vec![true], vec![]),
            Err(GraphError::GadgetLength { .. })
        ));
    }

    #[test]
    fn feasibility_matches_bits_exhaustively() {
        for b in 1..=8 {
            for xm in 0..1usize << b {
                for ym in 0..1usize << b {
                    let (x, y) = (bits(xm, b), bits(ym, b));
                    let sv = GadgetSpec::new(GadgetKind::StVerify, x.clone(), y.clone()).unwrap();
                    let g = generate_gadget(&sv).unwrap();
                    let is_tree = g.m() + 1 == g.n() && components(&g) == 1;
                    assert_eq!(is_tree, xm == ym, "stverify b={b} x={xm} y={ym}");

                    let cn = GadgetSpec::new(GadgetKind::Conn, x.clone(), y.clone()).unwrap();
                    let g = generate_gadget(&cn).unwrap();
                    assert_eq!(components(&g) == 1, xm & ym == 0, "conn b={b}");
                    assert_eq!(cn.predicted(), xm & ym == 0);

                    if xm | ym == (1 << b) - 1 {
                        let sl = GadgetSpec::new(GadgetKind::StLower, x, y).unwrap();
                        let g = generate_gadget(&sl).unwrap();
                        assert_eq!(components(&g) == 1, sl.predicted());
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_sampling() {
        let spec = random_admissible(300, 4);
        assert!(spec.validate().is_ok());
        let both = spec.x.iter().zip(&spec.y).filter(|(a, b)| **a && **b).count();
        // Each coordinate is (1,1) with probability 1/3.
        assert!((70..=130).contains(&both), "{both}");
        assert_eq!(spec, random_admissible(300, 4));
    }

    #[test]
    fn random_gadgets_are_balanced() {
        for kind in [GadgetKind::StVerify, GadgetKind::Conn] {
            let yes = (0..200)
                .filter(|&seed| random_gadget(kind, 12, seed).predicted())
                .count();
            assert!((60..=140).contains(&yes), "{kind:?}: {yes}");
        }
    }
}
