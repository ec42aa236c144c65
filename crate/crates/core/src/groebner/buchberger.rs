//! Buchberger's algorithm for submodules of free modules, with the
//! Gebauer–Möller pair update and the sugar selection strategy.

use crate::monomial::Monomial;

use super::vector::{ModuleOrder, Vector};

#[derive(Clone, Debug)]
struct Elem {
    lm: Monomial,
    comp: u32,
    sugar: i64,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: i64,
}

/// Reducers grouped by leading component.
#[derive(Clone, Debug, Default)]
pub(crate) struct ReducerIndex {
    by_comp: Vec<Vec<usize>>,
}

impl ReducerIndex {
    pub(crate) fn insert(&mut self, comp: u32, idx: usize) {
        let c = comp as usize;
        if self.by_comp.len() <= c {
            self.by_comp.resize(c + 1, Vec::new());
        }
        self.by_comp[c].push(idx);
    }

    fn retain(&mut self, mut keep: impl FnMut(usize) -> bool) {
        for list in &mut self.by_comp {
            list.retain(|&i| keep(i));
        }
    }

    pub(crate) fn candidates(&self, comp: u32) -> &[usize] {
        self.by_comp.get(comp as usize).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

/// Fully reduces `v` modulo the elements listed in `index`. All reducers
/// are assumed monic.
pub(crate) fn reduce(v: Vector, elems: &[Vector], index: &ReducerIndex, ord: &ModuleOrder) -> Vector {
    let mut rem = Vec::new();
    let mut cur = v.into_terms();
    let mut pos = 0;
    while pos < cur.len() {
        let (m, comp, c) = &cur[pos];
        let found = index
            .candidates(*comp)
            .iter()
            .map(|&i| &elems[i])
            .find(|g| g.lead().is_some_and(|l| l.0.divides(m)));
        match found {
            Some(g) => {
                let q = m.div(&g.lead().unwrap().0);
                let coef = -c;
                let tail = Vector::from_sorted(cur.split_off(pos));
                cur = tail.add_scaled(g, &coef, &q, ord).into_terms();
                pos = 0;
            }
            None => {
                rem.push(cur[pos].clone());
                pos += 1;
            }
        }
    }
    Vector::from_sorted(rem)
}

fn spoly(a: &Vector, b: &Vector, lcm: &Monomial, ord: &ModuleOrder) -> Vector {
    let one = a.lead().unwrap().2.field().one();
    let ma = lcm.div(&a.lead().unwrap().0);
    let mb = lcm.div(&b.lead().unwrap().0);
    a.mul_term(&ma, &one).add_scaled(b, &-&one, &mb, ord)
}

struct State<'a> {
    ord: &'a ModuleOrder,
    weights: &'a [u32],
    vecs: Vec<Vector>,
    elems: Vec<Elem>,
    active: Vec<bool>,
    index: ReducerIndex,
    pairs: Vec<Pair>,
    product_criterion: bool,
}

impl State<'_> {
    fn reduce_here(&self, v: Vector) -> Vector {
        reduce(v, &self.vecs, &self.index, self.ord)
    }

    fn insert(&mut self, v: Vector, sugar: i64) {
        let v = v.monic();
        let (lm, comp) = {
            let l = v.lead().unwrap();
            (l.0.clone(), l.1)
        };
        let h = self.elems.len();
        self.vecs.push(v);
        self.elems.push(Elem { lm, comp, sugar });
        self.active.push(false);
        self.update(h);
    }

    /// Gebauer–Möller update for a new element `h`.
    fn update(&mut self, h: usize) {
        let (hlm, hc) = (self.elems[h].lm.clone(), self.elems[h].comp);
        let w = self.weights;
        let disjoint = |g: &Monomial| self.product_criterion && hlm.is_coprime(g);

        let mut c: Vec<(usize, Monomial)> = (0..self.elems.len())
            .filter(|&g| self.active[g] && self.elems[g].comp == hc)
            .map(|g| (g, hlm.lcm(&self.elems[g].lm, w)))
            .collect();
        let mut d: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g, lcm)) = c.pop() {
            let keep = disjoint(&self.elems[g].lm)
                || (!c.iter().any(|(_, l)| l.divides(&lcm)) && !d.iter().any(|(_, l)| l.divides(&lcm)));
            if keep {
                d.push((g, lcm));
            }
        }
        let new_pairs: Vec<Pair> = d
            .into_iter()
            .filter(|(g, _)| !disjoint(&self.elems[*g].lm))
            .map(|(g, lcm)| {
                let eh = &self.elems[h];
                let eg = &self.elems[g];
                let deg = lcm.degree() as i64;
                let sugar = (eh.sugar - eh.lm.degree() as i64).max(eg.sugar - eg.lm.degree() as i64) + deg;
                Pair {
                    i: g,
                    j: h,
                    lcm,
                    comp: hc,
                    sugar,
                }
            })
            .collect();

        let elems = &self.elems;
        self.pairs.retain(|p| {
            if p.comp != hc || !hlm.divides(&p.lcm) {
                return true;
            }
            hlm.lcm(&elems[p.i].lm, w) == p.lcm || hlm.lcm(&elems[p.j].lm, w) == p.lcm
        });
        self.pairs.extend(new_pairs);

        let mut dropped = false;
        for g in 0..self.elems.len() {
            if self.active[g] && self.elems[g].comp == hc && hlm.divides(&self.elems[g].lm) {
                self.active[g] = false;
                dropped = true;
            }
        }
        if dropped {
            let active = &self.active;
            self.index.retain(|i| active[i]);
        }
        self.active[h] = true;
        self.index.insert(hc, h);
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ord.term_degree(&a.lcm, a.comp).cmp(&ord.term_degree(&b.lcm, b.comp)))
                    .then_with(|| ord.cmp((&a.lcm, a.comp), (&b.lcm, b.comp)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Computes the reduced Gröbner basis of the submodule generated by `gens`.
/// Output is sorted ascending by leading term; all elements are monic.
pub fn groebner_basis(gens: Vec<Vector>, ord: &ModuleOrder) -> Vec<Vector> {
    let weights = ord.mono.weights().to_vec();
    let max_comp = gens.iter().filter_map(|g| g.max_component()).max().unwrap_or(0);
    let mut st = State {
        ord,
        weights: &weights,
        vecs: Vec::new(),
        elems: Vec::new(),
        active: Vec::new(),
        index: ReducerIndex::default(),
        pairs: Vec::new(),
        product_criterion: max_comp == 0,
    };

    let mut inputs: Vec<Vector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        ord.cmp((&la.0, la.1), (&lb.0, lb.1))
    });
    inputs.dedup();

    for g in inputs {
        let sugar = g.degree(ord).unwrap_or(0);
        let r = st.reduce_here(g);
        if !r.is_zero() {
            st.insert(r, sugar);
        }
    }

    while let Some(p) = st.pop_pair() {
        let s = spoly(&st.vecs[p.i], &st.vecs[p.j], &p.lcm, ord);
        let r = st.reduce_here(s);
        if !r.is_zero() {
            st.insert(r, p.sugar);
        }
    }

    // interreduce the minimal basis
    let active: Vec<usize> = (0..st.elems.len()).filter(|&i| st.active[i]).collect();
    let mut out: Vec<Vector> = active
        .iter()
        .map(|&i| {
            let v = &st.vecs[i];
            let lead = v.lead().unwrap().clone();
            let tail = Vector::from_sorted(v.terms()[1..].to_vec());
            let tail = reduce(tail, &st.vecs, &st.index, ord);
            let mut terms = vec![lead];
            terms.extend(tail.into_terms());
            Vector::from_sorted(terms)
        })
        .collect();
    out.sort_by(|a, b| {
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        ord.cmp((&la.0, la.1), (&lb.0, lb.1))
    });
    out
}
