//! Random quasi-polynomials with integer values, in the binomial basis.

use rand::Rng;

pub fn binom(n: i64, k: usize) -> i64 {
    (0..k as i64).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

/// Per residue class, coefficients in the binomial basis C(n, k).
pub struct QuasiPolynomial {
    pub classes: Vec<Vec<i64>>,
}

impl QuasiPolynomial {
    pub fn random(rng: &mut impl Rng) -> Self {
        let period = rng.gen_range(1..=4usize);
        let degree = rng.gen_range(0..=3usize);
        let classes = (0..period)
            .map(|_| {
                let mut c: Vec<i64> = (0..=degree).map(|_| rng.gen_range(0..=6)).collect();
                c[degree] = rng.gen_range(1..=6);
                c
            })
            .collect();
        QuasiPolynomial { classes }
    }

    pub fn eval(&self, n: i64) -> i64 {
        let c = &self.classes[n as usize % self.classes.len()];
        c.iter().enumerate().map(|(k, a)| a * binom(n, k)).sum()
    }

    pub fn minimal_period(&self) -> usize {
        let p = self.classes.len();
        (1..=p)
            .find(|&q| p.is_multiple_of(q) && (0..p).all(|r| self.classes[r] == self.classes[r % q]))
            .unwrap()
    }

    pub fn degree(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).max().unwrap()
    }
}
