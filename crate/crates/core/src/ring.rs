//! Ring presentations R = k[x_1..x_n]/(relations) and the polynomial text syntax.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::groebner::{groebner_basis, ModuleOrder, Vector};
use crate::monomial::{Monomial, MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

pub type Ring = Arc<RingPresentation>;

/// Variables, grading, coefficient field, monomial order and defining relations.
#[derive(Debug, PartialEq, Eq)]
pub struct RingPresentation {
    vars: Vec<String>,
    field: Field,
    weights: Vec<u32>,
    order: MonomialOrder,
    relations: Vec<Polynomial>,
    relation_basis: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl RingPresentation {
    /// The polynomial ring k[vars] with the given weights (all 1 when `None`).
    pub fn polynomial_ring(
        vars: &[&str],
        field: Field,
        weights: Option<&[u32]>,
        kind: OrderKind,
    ) -> Result<Ring> {
        let weights = match weights {
            Some(w) => {
                if w.len() != vars.len() {
                    return Err(AlgebraError::VariableCount {
                        expected: vars.len(),
                        found: w.len(),
                    });
                }
                if w.contains(&0) {
                    return Err(AlgebraError::Unsupported("variable weights must be positive".into()));
                }
                w.to_vec()
            }
            None => vec![1; vars.len()],
        };
        Ok(Arc::new(RingPresentation {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            field,
            order: MonomialOrder::new(kind, &weights),
            weights,
            relations: Vec::new(),
            relation_basis: Vec::new(),
        }))
    }

    /// The quotient of this ring's ambient polynomial ring by `relations`
    /// (which must be homogeneous for the weights).
    pub fn quotient(&self, relations: Vec<Polynomial>) -> Result<Ring> {
        for r in &relations {
            if !r.is_homogeneous() {
                return Err(AlgebraError::InhomogeneousRelation(self.format_poly(r)));
            }
        }
        self.quotient_ungraded(relations)
    }

    /// Like [`quotient`](Self::quotient) without the homogeneity check.
    pub fn quotient_ungraded(&self, relations: Vec<Polynomial>) -> Result<Ring> {
        let mut rels: Vec<Polynomial> = self.relations.clone();
        rels.extend(relations.into_iter().filter(|r| !r.is_zero()));
        let mono_ord = ModuleOrder::rank_one(self.order.clone());
        let basis = groebner_basis(
            rels.iter().map(|p| Vector::from_poly(p, 0, &mono_ord)).collect(),
            &mono_ord,
        )
        .into_iter()
        .map(|v| v.component(0, &self.order))
        .collect();
        Ok(Arc::new(RingPresentation {
            vars: self.vars.clone(),
            field: self.field,
            weights: self.weights.clone(),
            order: self.order.clone(),
            relations: rels,
            relation_basis: basis,
        }))
    }

    /// The ambient polynomial ring (no relations) with a different order.
    pub fn with_order(&self, kind: OrderKind) -> Ring {
        Arc::new(RingPresentation {
            vars: self.vars.clone(),
            field: self.field,
            weights: self.weights.clone(),
            order: MonomialOrder::new(kind, &self.weights),
            relations: Vec::new(),
            relation_basis: Vec::new(),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// Reduced Gröbner basis of the relation ideal.
    pub fn relation_basis(&self) -> &[Polynomial] {
        &self.relation_basis
    }

    pub fn is_graded(&self) -> bool {
        self.relations.iter().all(|r| r.is_homogeneous())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::new(exps, &self.weights)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::term(Monomial::var(self.nvars(), i, self.weights[i]), self.field.one())
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::constant(self.field, self.nvars(), c)
    }

    pub fn one(&self) -> Polynomial {
        self.constant(1)
    }

    pub fn scalar(&self, c: i64) -> Scalar {
        self.field.from_i64(c)
    }

    /// weight · exponent, summed.
    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        m.exponents().iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.add(b, &self.order)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.sub(b, &self.order)
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.mul(b, &self.order)
    }

    pub fn pow(&self, a: &Polynomial, n: u32) -> Polynomial {
        a.pow(n, &self.order, self.one())
    }

    /// Checked arithmetic: both operands must be elements of this ring.
    pub fn poly_arith(&self, a: &Polynomial, b: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        self.check_member(a)?;
        self.check_member(b)?;
        Ok(match op {
            PolyOp::Add => self.add(a, b),
            PolyOp::Sub => self.sub(a, b),
            PolyOp::Mul => self.mul(a, b),
        })
    }

    pub fn check_member(&self, p: &Polynomial) -> Result<()> {
        for (m, c) in p.terms() {
            if m.nvars() != self.nvars() || !self.field.contains(c) {
                return Err(AlgebraError::MixedRings);
            }
        }
        Ok(())
    }

    /// Normal form modulo the ring relations.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        if self.relation_basis.is_empty() {
            return p.clone();
        }
        let ord = ModuleOrder::rank_one(self.order.clone());
        let basis = crate::groebner::GroebnerBasis::compute(
            self.relation_basis.iter().map(|r| Vector::from_poly(r, 0, &ord)).collect(),
            ord.clone(),
            1,
        );
        basis.normal_form(&Vector::from_poly(p, 0, &ord)).component(0, &self.order)
    }

    /// Rewrites a polynomial of another ring with the same variables into this ring's order.
    pub fn adopt(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            p.terms().iter().map(|(m, c)| (self.monomial(m.exponents()), c.clone())).collect(),
            &self.order,
        )
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Parses the polynomial text syntax: integer coefficients, declared
    /// variable names, `+ - *`, `^` with nonnegative integer exponents, parentheses.
    pub fn parse_poly(&self, text: &str) -> Result<Polynomial> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        if p.at_end() {
            return Err(p.error("empty polynomial"));
        }
        let out = p.expr()?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.error("unexpected character"));
        }
        Ok(out)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.vars[i].clone()),
                e => parts.push(format!("{}^{}", self.vars[i], e)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Prints in the same syntax `parse_poly` accepts (rational coefficients
    /// print as `p/q`, which only round-trips through integer multiples).
    pub fn format_poly(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative_repr();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                let _ = write!(out, "{}", abs);
            } else if abs.is_one() {
                out.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(out, "{}*{}", abs, self.format_monomial(m));
            }
        }
        out
    }
}

struct Parser<'a> {
    ring: &'a RingPresentation,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse {
            column: self.pos + 1,
            message: msg.to_string(),
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.product()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.product()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = self.ring.mul(&acc, &f);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' || c == b'_' => {
                    return Err(self.error("juxtaposition is not allowed; use '*'"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                self.pos = start;
                return Err(self.error("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'0'..=b'9') => {
                let d = self.digits();
                let v: BigInt = d.parse().map_err(|_| self.error("bad integer"))?;
                let c = self.ring.field.from_bigint(&v);
                Ok(Polynomial::term(self.ring.one_monomial(), c))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown variable '{}'", name)))
                    }
                }
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::DEFAULT_PRIME;

    fn ring(vars: &[&str]) -> Ring {
        RingPresentation::polynomial_ring(vars, Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap()
    }

    #[test]
    fn cancellation() {
        let r = ring(&["x", "y"]);
        let a = r.parse_poly("x + y").unwrap();
        let b = r.parse_poly("x - y").unwrap();
        assert_eq!(r.poly_arith(&a, &b, PolyOp::Add).unwrap(), r.parse_poly("2*x").unwrap());
    }

    #[test]
    fn square_and_difference_of_squares() {
        let r = ring(&["U", "V", "W"]);
        let v = r.parse_poly("V").unwrap();
        assert_eq!(r.mul(&v, &v), r.parse_poly("V^2").unwrap());
        let a = r.parse_poly("U + V").unwrap();
        let b = r.parse_poly("U - V").unwrap();
        assert_eq!(r.format_poly(&r.mul(&a, &b)), "U^2 - V^2");
    }

    #[test]
    fn relation_is_homogeneous() {
        let r = ring(&["U", "V", "W"]);
        let f = r.parse_poly("V^2 - U*W").unwrap();
        assert!(f.terms().iter().all(|(m, _)| r.weighted_degree(m) == 2));
        assert!(r.quotient(vec![f]).is_ok());
        let g = r.parse_poly("V^2 - U").unwrap();
        assert!(r.quotient(vec![g]).is_err());
    }

    #[test]
    fn mixed_rings_rejected() {
        let r = ring(&["x", "y"]);
        let s = ring(&["x", "y", "z"]);
        let a = r.parse_poly("x").unwrap();
        let b = s.parse_poly("z").unwrap();
        assert_eq!(r.poly_arith(&a, &b, PolyOp::Mul), Err(AlgebraError::MixedRings));
    }

    #[test]
    fn parse_errors_carry_columns() {
        let r = ring(&["x", "y"]);
        match r.parse_poly("x + q") {
            Err(AlgebraError::Parse { column, .. }) => assert_eq!(column, 5),
            other => panic!("{:?}", other),
        }
        assert!(r.parse_poly("2x").is_err());
        assert!(r.parse_poly("").is_err());
        assert!(r.parse_poly("x^").is_err());
    }

    #[test]
    fn reduce_modulo_relation() {
        let r = ring(&["U", "V", "W"]);
        let q = r.quotient(vec![r.parse_poly("V^2 - U*W").unwrap()]).unwrap();
        let v2 = q.parse_poly("V^2").unwrap();
        assert_eq!(q.format_poly(&q.reduce(&v2)), "U*W");
    }

    #[test]
    fn format_parse_round_trip() {
        let r = ring(&["a", "b"]);
        for s in ["a^3 - 2*a*b + 7", "-a + b^2", "0", "5"] {
            let p = r.parse_poly(s).unwrap();
            assert_eq!(r.parse_poly(&r.format_poly(&p)).unwrap(), p);
        }
    }
}
