use std::collections::HashMap;
use std::fmt::Write as _;

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// Sparse element of `Z[x, 1/x][S_D]` over a sorted label set `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElem {
    support: Vec<usize>,
    terms: HashMap<Perm, IntPoly>,
}

fn sorted_unique(mut labels: Vec<usize>) -> Result<Vec<usize>> {
    labels.sort_unstable();
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Support("repeated label in support".into()));
    }
    if labels.len() > u16::MAX as usize {
        return Err(Error::Support("support too large".into()));
    }
    Ok(labels)
}

/// Sorted union of two sorted label sets.
pub fn union_support(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = a.iter().chain(b).copied().collect();
    u.sort_unstable();
    u.dedup();
    u
}

impl GroupRingElem {
    pub fn zero(support: Vec<usize>) -> Result<Self> {
        Ok(GroupRingElem { support: sorted_unique(support)?, terms: HashMap::new() })
    }

    pub fn identity(support: Vec<usize>) -> Result<Self> {
        let mut e = Self::zero(support)?;
        let n = e.support.len();
        e.terms.insert(Perm::identity(n), IntPoly::one());
        Ok(e)
    }

    /// The scalar `c` on the empty support.
    pub fn scalar(c: IntPoly) -> Self {
        let mut e = GroupRingElem { support: Vec::new(), terms: HashMap::new() };
        e.add_term(Perm::identity(0), c);
        e
    }

    /// Single term given by a label map `f` on `support`.
    pub fn from_label_map(support: Vec<usize>, f: impl Fn(usize) -> usize, coeff: IntPoly) -> Result<Self> {
        let mut e = Self::zero(support)?;
        let p = e.perm_from_label_map(f)?;
        e.add_term(p, coeff);
        Ok(e)
    }

    /// Single term given in cycle notation over labels.
    pub fn from_label_cycles(support: Vec<usize>, cycles: &[Vec<usize>], coeff: IntPoly) -> Result<Self> {
        let mut e = Self::zero(support)?;
        let mut pos_cycles = Vec::new();
        for c in cycles {
            pos_cycles.push(c.iter().map(|&l| e.position_or_err(l)).collect::<Result<Vec<_>>>()?);
        }
        e.add_term(Perm::from_cycles(e.support.len(), &pos_cycles), coeff);
        Ok(e)
    }

    pub fn perm_from_label_map(&self, f: impl Fn(usize) -> usize) -> Result<Perm> {
        let images = self.support.iter().map(|&l| self.position_or_err(f(l))).collect::<Result<Vec<_>>>()?;
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Support("label map is not a bijection".into()));
            }
        }
        Ok(Perm::from_images(images))
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &IntPoly)> {
        self.terms.iter()
    }

    /// Terms sorted by permutation, for deterministic traversal.
    pub fn sorted_terms(&self) -> Vec<(&Perm, &IntPoly)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    pub fn coeff(&self, p: &Perm) -> IntPoly {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    pub fn position(&self, label: usize) -> Option<usize> {
        self.support.binary_search(&label).ok()
    }

    fn position_or_err(&self, label: usize) -> Result<usize> {
        self.position(label).ok_or_else(|| Error::Support(format!("label {label} outside the support")))
    }

    pub fn add_term(&mut self, p: Perm, c: IntPoly) {
        assert_eq!(p.len(), self.support.len(), "permutation size does not match the support");
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.support != other.support {
            return Err(Error::Support("sum of elements on different supports".into()));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        let mut out = GroupRingElem { support: self.support.clone(), terms: HashMap::new() };
        for (p, d) in &self.terms {
            out.add_term(p.clone(), d.mul_ref(c));
        }
        out
    }

    /// Embed into a larger support, fixing the new labels.
    pub fn lift(&self, support: &[usize]) -> Result<Self> {
        if support == self.support.as_slice() {
            return Ok(self.clone());
        }
        let target = Self::zero(support.to_vec())?;
        let pos = self.support.iter().map(|&l| target.position_or_err(l)).collect::<Result<Vec<_>>>()?;
        let n = target.support.len();
        let mut out = target;
        for (p, c) in &self.terms {
            let mut img: Vec<usize> = (0..n).collect();
            for (i, &pi) in pos.iter().enumerate() {
                img[pi] = pos[p.apply(i)];
            }
            out.terms.insert(Perm::from_images(img), c.clone());
        }
        Ok(out)
    }

    /// Product in the group ring; factors are first lifted to the union support.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        let support = union_support(&self.support, &other.support);
        let a = self.lift(&support)?;
        let b = other.lift(&support)?;
        let mut out = Self::zero(support)?;
        for (pa, ca) in &a.terms {
            for (pb, cb) in &b.terms {
                out.add_term(pa.compose(pb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    fn kept_index(&self, kept: &[usize]) -> Result<(Vec<usize>, Vec<Option<u16>>)> {
        let kept = sorted_unique(kept.to_vec())?;
        let mut index = vec![None; self.support.len()];
        for (k, &l) in kept.iter().enumerate() {
            index[self.position_or_err(l)?] = Some(k as u16);
        }
        Ok((kept, index))
    }

    fn project(&self, kept: &[usize], weigh: bool) -> Result<Self> {
        let (kept, index) = self.kept_index(kept)?;
        let n = kept.len();
        let mut out = Self::zero(kept)?;
        for (p, c) in &self.terms {
            let (r, avoiding) = p.restrict(&index, n);
            let c = if weigh && avoiding > 0 { c.shift(avoiding as i64) } else { c.clone() };
            out.add_term(r, c);
        }
        Ok(out)
    }

    /// Restrict each permutation's cycle notation to `kept`.
    pub fn proj(&self, kept: &[usize]) -> Result<Self> {
        self.project(kept, false)
    }

    /// Like [`proj`](Self::proj), multiplying by `x` per cycle avoiding `kept`.
    pub fn fproj(&self, kept: &[usize]) -> Result<Self> {
        self.project(kept, true)
    }

    /// Rename labels by an injective map.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        let new_labels: Vec<usize> = self.support.iter().map(|&l| f(l)).collect();
        let out = Self::zero(new_labels.clone())?;
        // old position i sits at new position pos[i]
        let pos: Vec<usize> = new_labels.iter().map(|&l| out.position(l).expect("present")).collect();
        let n = pos.len();
        let mut out = out;
        for (p, c) in &self.terms {
            let mut img = vec![0; n];
            for i in 0..n {
                img[pos[i]] = pos[p.apply(i)];
            }
            out.terms.insert(Perm::from_images(img), c.clone());
        }
        Ok(out)
    }

    /// Coefficient of an element on the empty support.
    pub fn scalar_value(&self) -> Result<IntPoly> {
        if !self.support.is_empty() {
            return Err(Error::Support("element is not projected to the empty set".into()));
        }
        Ok(self.terms.values().next().cloned().unwrap_or_default())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> IntPoly {
        self.terms.values().fold(IntPoly::zero(), |acc, c| &acc + c)
    }

    /// Cycle notation over labels, fixed points included.
    pub fn cycle_notation(&self, p: &Perm) -> String {
        let mut s = String::new();
        for c in p.cycles() {
            let labels: Vec<String> = c.iter().map(|&i| self.support[i].to_string()).collect();
            let _ = write!(s, "({})", labels.join(","));
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// One line per term: cycle notation, a tab, the coefficient. Sorted.
    pub fn dump(&self) -> String {
        let mut lines: Vec<String> =
            self.terms.iter().map(|(p, c)| format!("{}\t{}", self.cycle_notation(p), c)).collect();
        lines.sort();
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> IntPoly {
        IntPoly::x_pow(1)
    }

    #[test]
    fn two_element_algebra() {
        let swap = GroupRingElem::from_label_cycles(vec![1, 2], &[vec![1, 2]], IntPoly::one()).unwrap();
        let id = GroupRingElem::identity(vec![1, 2]).unwrap();
        let a = swap.add(&id.scale(&x())).unwrap();
        let prod = a.multiply(&swap).unwrap();
        let expect = id.add(&swap.scale(&x())).unwrap();
        assert_eq!(prod, expect);
        assert_eq!(id.multiply(&a).unwrap(), a);
    }

    #[test]
    fn proj_example() {
        let e = GroupRingElem::from_label_cycles(vec![1, 2, 3, 4, 5], &[vec![1, 2, 5], vec![3, 4]], IntPoly::one())
            .unwrap();
        let p = e.proj(&[1, 2, 3]).unwrap();
        assert_eq!(p.dump(), "(1,2)(3)\t1");
        let f = e.fproj(&[1, 2]).unwrap();
        assert_eq!(f.dump(), "(1,2)\tx");
        let f = e.fproj(&[1, 2, 5]).unwrap();
        assert_eq!(f.dump(), "(1,2,5)\tx");
        let empty = e.proj(&[]).unwrap();
        assert_eq!(empty.scalar_value().unwrap(), IntPoly::one());
        assert!(e.proj(&[9]).is_err());
    }

    #[test]
    fn identity_face_projection() {
        let id = GroupRingElem::identity(vec![0, 1, 2, 3]).unwrap();
        let f = id.fproj(&[0]).unwrap();
        assert_eq!(f, GroupRingElem::identity(vec![0]).unwrap().scale(&IntPoly::x_pow(3)));
    }

    #[test]
    fn disjoint_supports_commute() {
        let a = GroupRingElem::from_label_cycles(vec![0, 1], &[vec![0, 1]], x()).unwrap();
        let b = GroupRingElem::from_label_cycles(vec![5, 7, 9], &[vec![5, 9, 7]], IntPoly::one()).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        assert_eq!(a.multiply(&b).unwrap().support(), &[0, 1, 5, 7, 9]);
    }

    #[test]
    fn relabel_round_trip() {
        let a = GroupRingElem::from_label_cycles(vec![0, 1, 2], &[vec![0, 2]], x()).unwrap();
        let b = a.relabel(|l| 10 - l).unwrap();
        assert_eq!(b.dump(), "(8,10)(9)\tx");
        assert_eq!(b.relabel(|l| 10 - l).unwrap(), a);
    }
}
