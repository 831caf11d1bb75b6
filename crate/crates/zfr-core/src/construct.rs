//! The two hypergraph constructions behind the counterexample pipeline.
//!
//! * [`s_transform`] adds one fresh vertex per edge and enlarges each edge by
//!   its own fresh vertex. Uniformity goes up by one; linearity and the
//!   maximum degree are preserved.
//! * [`h_construction`] builds the modular-lines hypergraph `H_{k,Δ}` on
//!   `[k] × Z_p` with one edge `{(i, a + i·d) : i ∈ 1..=k}` per
//!   `(a, d) ∈ Z_p × {1..Δ}`, where `p` is the smallest prime `>= Δ`. The
//!   result is k-uniform, Δ-regular and linear, on `k·p <= 2kΔ` vertices.
//! * [`counterexample`] chains them: build `H = H_{k-1,Δ}`, trim one vertex
//!   if the vertex count is even, and return `S_H`.
//!
//! Vertex encoding for `H_{k,Δ}` is fixed so edge lists are byte
//! reproducible: `(i, x)` with `i ∈ 1..=k`, `x ∈ Z_p` gets id `(i-1)·p + x`.

use alloc::vec::Vec;
use core::fmt;

use crate::hypergraph::Hypergraph;

/// Parameter errors for the constructions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// `h_construction` needs uniformity `k >= 2`.
    UniformityTooSmall { k: u32 },
    /// `h_construction` needs `Δ >= k`; `counterexample` needs `Δ >= k-1`.
    DegreeTooSmall { k: u32, delta: u32 },
    /// `counterexample` needs `k >= 3` (the transform of a `(k-1)`-uniform
    /// hypergraph with `k-1 >= 2`).
    CounterexampleUniformityTooSmall { k: u32 },
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::UniformityTooSmall { k } => {
                write!(f, "uniformity k must be >= 2, got {k}")
            }
            ConstructError::DegreeTooSmall { k, delta } => {
                write!(f, "degree delta must be >= uniformity ({k}), got {delta}")
            }
            ConstructError::CounterexampleUniformityTooSmall { k } => {
                write!(f, "counterexample uniformity k must be >= 3, got {k}")
            }
        }
    }
}

/// Provenance record for a generated counterexample instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleMeta {
    /// Uniformity of the final hypergraph `S_H`.
    pub k: u32,
    /// Maximum degree of both `H` and `S_H`.
    pub delta: u32,
    /// Prime used by the base construction, the smallest prime `>= delta`.
    pub p: u32,
    /// Vertex count of the (possibly trimmed) base hypergraph `H`; always odd.
    pub n_h: u64,
    /// Highest-id vertex removed to make the vertex count odd, if any.
    pub removed_vertex: Option<u32>,
    /// Vertex count of `S_H`, equal to `n_h + |E(H)|`.
    pub n_sg: u64,
}

/// Builds `S_G`: vertex set is `V ⊔ E` (ids `0..n-1` keep their meaning, id
/// `n+j` stands for edge `j`), and edge `j` of the result is edge `j` of `G`
/// together with its fresh vertex `n+j`.
///
/// # Panics
/// If `n + |E|` overflows `u32` (far beyond any materializable instance).
pub fn s_transform(g: &Hypergraph) -> Hypergraph {
    let n = g.n();
    let total = u64::from(n) + g.edge_count() as u64;
    let new_n = u32::try_from(total).expect("vertex count n + |E| exceeds u32");
    let edges: Vec<Vec<u32>> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(j, edge)| {
            let mut e = edge.clone();
            e.push(n + j as u32);
            e
        })
        .collect();
    Hypergraph::new(new_n, edges).expect("transform of a valid hypergraph is valid")
}

/// Deterministic trial-division primality test.
pub fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    if x % 3 == 0 {
        return x == 3;
    }
    let mut d = 5u64;
    while d * d <= x {
        if x % d == 0 || x % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Smallest prime `p >= delta`, for `delta >= 2`. Bertrand's postulate puts
/// it in `[delta, 2*delta]`, which callers rely on and tests re-verify.
///
/// # Panics
/// If `delta < 2`.
pub fn find_prime_in(delta: u32) -> u32 {
    assert!(delta >= 2, "find_prime_in requires delta >= 2");
    (delta..=2 * delta)
        .find(|&c| is_prime(u64::from(c)))
        .expect("a prime exists in [delta, 2 delta]")
}

/// Builds `H_{k,Δ}` together with the prime `p` it uses.
///
/// Vertices are `[k] × Z_p` encoded as `(i-1)·p + x`; for every
/// `(a, d) ∈ Z_p × {1..Δ}` there is one edge `{(i, (a + i·d) mod p) : i}`.
/// Edges are emitted in `(a, d)` lexicographic order. When `Δ = p` the value
/// `d = p ≡ 0` yields the "constant" edge `{(i, a) : i}`; it is a valid
/// size-k edge and is kept.
pub fn h_construction(k: u32, delta: u32) -> Result<(Hypergraph, u32), ConstructError> {
    if k < 2 {
        return Err(ConstructError::UniformityTooSmall { k });
    }
    if delta < k {
        return Err(ConstructError::DegreeTooSmall { k, delta });
    }
    let p = find_prime_in(delta);
    let n = k * p;
    let mut edges = Vec::with_capacity(p as usize * delta as usize);
    for a in 0..u64::from(p) {
        for d in 1..=u64::from(delta) {
            let edge: Vec<u32> = (1..=u64::from(k))
                .map(|i| {
                    let x = (a + i * d) % u64::from(p);
                    ((i - 1) * u64::from(p) + x) as u32
                })
                .collect();
            edges.push(edge);
        }
    }
    let h = Hypergraph::new(n, edges).expect("modular-lines edges are valid");
    Ok((h, p))
}

/// Builds the trimmed base hypergraph `H` for [`counterexample`] without
/// materializing `S_H`: `H = H_{k-1,Δ}`, minus the highest-id vertex when
/// the vertex count is even. The returned metadata already accounts for
/// `S_H` (its vertex count is `n_h + |E(H)|`).
pub fn counterexample_base(
    k: u32,
    delta: u32,
) -> Result<(Hypergraph, CounterexampleMeta), ConstructError> {
    if k < 3 {
        return Err(ConstructError::CounterexampleUniformityTooSmall { k });
    }
    if delta < k - 1 {
        return Err(ConstructError::DegreeTooSmall { k: k - 1, delta });
    }
    let (h, p) = h_construction(k - 1, delta)?;
    let (h, removed_vertex) = if h.n() % 2 == 0 {
        let v = h.n() - 1;
        (h.remove_vertex(v).expect("in range"), Some(v))
    } else {
        (h, None)
    };
    let n_h = u64::from(h.n());
    let meta = CounterexampleMeta {
        k,
        delta,
        p,
        n_h,
        removed_vertex,
        n_sg: n_h + h.edge_count() as u64,
    };
    Ok((h, meta))
}

/// The counterexample pipeline: returns `S_H` for the odd-trimmed
/// `H = H_{k-1,Δ}`, a k-uniform linear hypergraph with maximum degree `Δ`.
pub fn counterexample(
    k: u32,
    delta: u32,
) -> Result<(Hypergraph, CounterexampleMeta), ConstructError> {
    let (h, meta) = counterexample_base(k, delta)?;
    Ok((s_transform(&h), meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn s_transform_triangle_matches_figure() {
        let tri = Hypergraph::new(3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let s = s_transform(&tri);
        assert_eq!(s.n(), 6);
        assert_eq!(s.edges(), &[vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5]]);
        assert_eq!(s.uniformity(), Some(3));
        assert!(s.is_linear());
        let prof = s.degree_profile().unwrap();
        assert_eq!(prof.degrees, vec![2, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn s_transform_degenerate_cases() {
        let single = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
        let s = s_transform(&single);
        assert_eq!((s.n(), s.edges()), (3, [vec![0, 1, 2]].as_slice()));

        let edgeless = Hypergraph::edgeless(4);
        assert_eq!(s_transform(&edgeless), edgeless);
    }

    #[test]
    fn prime_search() {
        assert_eq!(find_prime_in(2), 2);
        assert_eq!(find_prime_in(3), 3);
        assert_eq!(find_prime_in(13), 13);
        assert_eq!(find_prime_in(1000), 1009);
        // Independent scan: no prime strictly between delta and the answer.
        for delta in [4u32, 9, 24, 90, 1000] {
            let p = find_prime_in(delta);
            assert!(is_prime(u64::from(p)) && p >= delta && p <= 2 * delta);
            assert!((delta..p).all(|c| !is_prime(u64::from(c))));
        }
        assert_eq!(find_prime_in(1000), 1009);
    }

    #[test]
    fn h_2_2_exact_edges() {
        let (h, p) = h_construction(2, 2).unwrap();
        assert_eq!(p, 2);
        assert_eq!(h.n(), 4);
        // (1,x) -> x, (2,x) -> 2 + x; hand enumeration over a in Z_2, d in {1,2}.
        assert_eq!(
            h.edges(),
            &[vec![1, 2], vec![0, 2], vec![0, 3], vec![1, 3]]
        );
        let prof = h.degree_profile().unwrap();
        assert_eq!((prof.max, prof.min), (2, 2));
        assert!(h.is_linear());
    }

    #[test]
    fn h_3_3_counts() {
        let (h, p) = h_construction(3, 3).unwrap();
        assert_eq!(p, 3);
        assert_eq!((h.n(), h.edge_count()), (9, 9));
        assert_eq!(h.uniformity(), Some(3));
        let prof = h.degree_profile().unwrap();
        assert_eq!((prof.max, prof.min), (3, 3));
        assert!(h.is_linear());
    }

    #[test]
    fn h_2_3_remove_vertex() {
        let (h, _) = h_construction(2, 3).unwrap();
        assert_eq!((h.n(), h.edge_count()), (6, 9));
        let r = h.remove_vertex(0).unwrap();
        assert_eq!((r.n(), r.edge_count()), (5, 6));
        assert_eq!(r.degree_profile().unwrap().min, 2);
    }

    /// Pairwise-intersection reference, independent of `is_linear`.
    fn linear_by_pairwise_scan(h: &Hypergraph) -> bool {
        let edges = h.edges();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let shared =
                    edges[i].iter().filter(|v| edges[j].contains(v)).count();
                if shared > 1 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn h_construction_invariants_exhaustive_sweep() {
        for k in 2..=5u32 {
            for delta in k..=30u32 {
                let (h, p) = h_construction(k, delta).unwrap();
                assert_eq!(h.n(), k * p);
                assert!(h.n() <= 2 * k * delta);
                assert_eq!(h.edge_count() as u64, u64::from(p) * u64::from(delta));
                assert_eq!(h.uniformity(), Some(k));
                let prof = h.degree_profile().unwrap();
                assert_eq!((prof.max, prof.min), (delta, delta));
                assert!(h.is_linear(), "H_{{{k},{delta}}} not linear");
                assert!(linear_by_pairwise_scan(&h), "pairwise scan disagrees at ({k},{delta})");
            }
        }
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            h_construction(1, 5),
            Err(ConstructError::UniformityTooSmall { k: 1 })
        ));
        assert!(matches!(
            h_construction(3, 2),
            Err(ConstructError::DegreeTooSmall { k: 3, delta: 2 })
        ));
        assert!(matches!(
            counterexample(2, 5),
            Err(ConstructError::CounterexampleUniformityTooSmall { k: 2 })
        ));
    }

    #[test]
    fn counterexample_small() {
        // k=3, delta=4: H_{2,4} lives on 2*5 = 10 vertices, trimmed to 9.
        let (sg, meta) = counterexample(3, 4).unwrap();
        assert_eq!(meta.p, 5);
        assert_eq!(meta.n_h, 9);
        assert_eq!(meta.removed_vertex, Some(9));
        assert_eq!(u64::from(sg.n()), meta.n_sg);
        assert_eq!(sg.uniformity(), Some(3));
        assert!(sg.is_linear());
        assert_eq!(sg.degree_profile().unwrap().max, 4);
    }

    #[test]
    fn counterexample_parity_and_meta() {
        for (k, delta) in [(3, 2), (3, 5), (4, 3), (4, 7), (5, 6), (5, 11)] {
            let (h, meta) = counterexample_base(k, delta).unwrap();
            assert_eq!(meta.n_h % 2, 1, "n_h must be odd");
            assert_eq!(u64::from(h.n()), meta.n_h);
            assert_eq!(meta.n_sg, meta.n_h + h.edge_count() as u64);
            // Trim happens exactly when (k-1)*p is even.
            let expected_trim = ((k - 1) * meta.p) % 2 == 0;
            assert_eq!(meta.removed_vertex.is_some(), expected_trim);
        }
    }

    #[test]
    fn counterexample_theorem_scale_arithmetic() {
        // k=3, delta=1000: p=1009, trimmed vertex kills exactly delta edges.
        let (h, meta) = counterexample_base(3, 1000).unwrap();
        assert_eq!(meta.p, 1009);
        assert_eq!(meta.n_h, 2017);
        assert_eq!(h.edge_count() as u64, 1009 * 1000 - 1000);
        assert_eq!(meta.n_sg, 2017 + (1009 * 1000 - 1000));
        let prof = h.degree_profile().unwrap();
        assert_eq!((prof.max, prof.min), (1000, 999));
    }
}
