//! Independent oracles: dense linear algebra over F_p on graded pieces, and
//! monomial counting for the Veronese example.
#![allow(dead_code)]

pub mod quasi;

use hgl_core::groebner::Vector;
use hgl_core::module::monomials_of_degree;
use hgl_core::monomial::{Monomial, OrderKind};
use hgl_core::poly::Polynomial;
use hgl_core::ring::{Ring, RingPresentation};
use hgl_core::scalar::{Field, Scalar, DEFAULT_PRIME};

pub const P: u64 = DEFAULT_PRIME as u64;

pub fn ring(vars: &[&str]) -> Ring {
    RingPresentation::polynomial_ring(vars, Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap()
}

pub fn veronese() -> Ring {
    let s = ring(&["U", "V", "W"]);
    s.quotient(vec![s.parse_poly("V^2 - U*W").unwrap()]).unwrap()
}

/// Degree bound for brute-force checks, from HGL_MAX_DEGREE (default 6).
pub fn max_degree() -> u32 {
    std::env::var("HGL_MAX_DEGREE").ok().and_then(|v| v.parse().ok()).unwrap_or(6)
}

fn residue(s: &Scalar) -> u64 {
    match s {
        Scalar::Mod { value, .. } => *value as u64,
        _ => panic!("oracle works over F_p"),
    }
}

fn inv(a: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % P, P - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank of a dense matrix over F_p (rows are vectors).
pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let iv = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = *x * iv % P;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x = (*x + P * P - f * y) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coordinates of homogeneous vectors of R^rank (free polynomial ring) in degree d.
pub struct GradedPiece {
    basis: Vec<(u32, Monomial)>,
}

impl GradedPiece {
    pub fn new(ring: &Ring, shifts: &[i64], d: i64) -> Self {
        let mut basis = Vec::new();
        for (c, &s) in shifts.iter().enumerate() {
            if d - s >= 0 {
                for m in monomials_of_degree(ring.weights(), (d - s) as u32) {
                    basis.push((c as u32, m));
                }
            }
        }
        GradedPiece { basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, v: &Vector) -> Vec<u64> {
        let mut out = vec![0; self.basis.len()];
        for (m, c, a) in v.terms() {
            let k = self
                .basis
                .iter()
                .position(|(bc, bm)| bc == c && bm == m)
                .expect("vector not homogeneous of this degree");
            out[k] = residue(a);
        }
        out
    }
}

fn times(v: &Vector, m: &Monomial) -> Vec<(Monomial, u32, Scalar)> {
    v.terms().iter().map(|(a, c, s)| (a.mul(m), *c, s.clone())).collect()
}

fn to_coords(piece: &GradedPiece, terms: &[(Monomial, u32, Scalar)]) -> Vec<u64> {
    let mut out = vec![0u64; piece.dim()];
    for (m, c, a) in terms {
        let k = piece.basis.iter().position(|(bc, bm)| bc == c && bm == m).unwrap();
        out[k] = (out[k] + residue(a)) % P;
    }
    out
}

/// dim_k of the degree-d part of the submodule of R^rank spanned by `gens`
/// (free polynomial ring only).
pub fn span_dim(ring: &Ring, shifts: &[i64], gens: &[Vector], d: i64) -> usize {
    let piece = GradedPiece::new(ring, shifts, d);
    let mut rows = Vec::new();
    let ord_deg = |v: &Vector| -> i64 {
        let (m, c, _) = &v.terms()[0];
        m.degree() as i64 + shifts[*c as usize]
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let gd = ord_deg(g);
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(ring.weights(), (d - gd) as u32) {
            rows.push(to_coords(&piece, &times(g, &m)));
        }
    }
    rank(rows)
}

/// dim_k of the degree-d part of ker(R^m → R^rank), source degrees `src`.
pub fn kernel_dim(ring: &Ring, target: &[i64], cols: &[Vector], src: &[i64], d: i64) -> usize {
    let piece = GradedPiece::new(ring, target, d);
    let mut rows = Vec::new();
    let mut n = 0;
    for (j, col) in cols.iter().enumerate() {
        if d - src[j] < 0 {
            continue;
        }
        for m in monomials_of_degree(ring.weights(), (d - src[j]) as u32) {
            n += 1;
            rows.push(to_coords(&piece, &times(col, &m)));
        }
    }
    n - rank(rows)
}

/// dim_k (k[U,V,W]/(V²−UW))_d = #monomials of degree d − #multiples of f in degree d.
pub fn veronese_hilbert(d: u32) -> usize {
    let s = ring(&["U", "V", "W"]);
    let f = s.parse_poly("V^2 - U*W").unwrap();
    let all = monomials_of_degree(s.weights(), d).len();
    if d < 2 {
        return all;
    }
    let piece_basis = monomials_of_degree(s.weights(), d);
    let rows: Vec<Vec<u64>> = monomials_of_degree(s.weights(), d - 2)
        .into_iter()
        .map(|m| {
            let p = Polynomial::term(m, Field::Prime(DEFAULT_PRIME).one());
            let q = s.mul(&p, &f);
            let mut row = vec![0u64; piece_basis.len()];
            for (mm, c) in q.terms() {
                row[piece_basis.iter().position(|b| b == mm).unwrap()] = residue(c);
            }
            row
        })
        .collect();
    all - rank(rows)
}

/// #{(a,b) : a+b even, a ≥ n, b ≥ 0, no 0 ≤ j ≤ n with a ≥ 2n−j and b ≥ j}.
pub fn veronese_oracle(n: u64) -> u64 {
    let mut count = 0;
    for a in n..=2 * n {
        for b in 0..=n {
            if (a + b) % 2 != 0 {
                continue;
            }
            let excluded = (0..=n).any(|j| a + j >= 2 * n && b >= j);
            if !excluded {
                count += 1;
            }
        }
    }
    count
}
