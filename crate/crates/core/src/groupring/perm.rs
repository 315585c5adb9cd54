use std::fmt;

/// A permutation of the positions `0..n` of a sorted support.
///
/// Composition follows function notation: `a.compose(b)` maps `i` to
/// `a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub(crate) Box<[u16]>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    /// From an image array; panics if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation");
            seen[i] = true;
        }
        Perm(images.into_iter().map(|i| i as u16).collect())
    }

    /// From cycles over positions; unmentioned positions are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                img[a] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(img)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u16; self.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        Perm(inv.into())
    }

    /// Cycles, each starting at its smallest position, ordered by that position.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                c.push(i);
                i = self.apply(i);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Restriction of the cycle notation to `kept` positions, and the number of
    /// cycles containing no kept position.
    ///
    /// `index[i]` is the position of `i` in the restricted support, or `None`.
    pub fn restrict(&self, index: &[Option<u16>], kept_len: usize) -> (Perm, usize) {
        let mut img = vec![0u16; kept_len];
        let mut avoiding = 0;
        let mut seen = vec![false; self.len()];
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            let mut first_kept: Option<u16> = None;
            let mut last_kept: Option<u16> = None;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                if let Some(k) = index[i] {
                    if let Some(l) = last_kept {
                        img[l as usize] = k;
                    } else {
                        first_kept = Some(k);
                    }
                    last_kept = Some(k);
                }
                i = self.apply(i);
            }
            match (first_kept, last_kept) {
                (Some(f), Some(l)) => img[l as usize] = f,
                _ => avoiding += 1,
            }
        }
        (Perm(img.into()), avoiding)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All cyclic orders of `items` with `items[0]` first, in lexicographic order.
pub fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    match items.split_first() {
        None => vec![Vec::new()],
        Some((&first, rest)) => rest
            .iter()
            .copied()
            .permutations(rest.len())
            .map(|p| std::iter::once(first).chain(p).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_function_notation() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]);
        let b = Perm::from_cycles(3, &[vec![1, 2]]);
        // a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
        assert_eq!(a.compose(&a.inverse()), Perm::identity(3));
    }

    #[test]
    fn restriction_matches_cycle_notation() {
        // (0 1 4)(2 3) restricted to {0, 1, 2} is (0 1)(2).
        let p = Perm::from_cycles(5, &[vec![0, 1, 4], vec![2, 3]]);
        let index = [Some(0), Some(1), Some(2), None, None];
        let (r, avoid) = p.restrict(&index, 3);
        assert_eq!(r, Perm::from_cycles(3, &[vec![0, 1]]));
        assert_eq!(avoid, 0);
        let index = [Some(0), Some(1), None, None, Some(2)];
        let (r, avoid) = p.restrict(&index, 3);
        assert_eq!(r, Perm::from_cycles(3, &[vec![0, 1, 2]]));
        assert_eq!(avoid, 1);
    }

    #[test]
    fn cyclic_order_count() {
        assert_eq!(cyclic_orders(&[4, 5, 6, 7]).len(), 6);
        assert_eq!(cyclic_orders(&[9]), vec![vec![9]]);
    }
}
