use std::cmp::Ordering;

/// Largest supported number of ring variables.
pub const MAX_VARS: usize = 8;

/// A power product stored as a dense exponent vector.
///
/// Positions at or beyond the ring's variable count are always zero, so the
/// ordering below is valid for every ring with at most [`MAX_VARS`] variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
        deg: 0,
    };

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Builds a monomial from exponents; `exps.len()` must not exceed [`MAX_VARS`].
    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            m.exps[i] = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += *o;
        }
        Monomial {
            exps,
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= *o;
        }
        Monomial {
            exps,
            deg: self.deg - other.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).max(*o);
            deg += *e as u32;
        }
        Monomial { exps, deg }
    }

    /// Colon `self : other`, i.e. `lcm(self, other) / other`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        let mut deg = 0;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = e.saturating_sub(*o);
            deg += *e as u32;
        }
        Monomial { exps, deg }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All monomials of degree `d` in the first `nvars` variables, in
    /// decreasing degrevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(
            var: usize,
            nvars: usize,
            left: u32,
            cur: &mut [u32; MAX_VARS],
            out: &mut Vec<Monomial>,
        ) {
            if var + 1 == nvars {
                cur[var] = left;
                out.push(Monomial::from_exponents(&cur[..nvars]));
                return;
            }
            for e in (0..=left).rev() {
                cur[var] = e;
                rec(var + 1, nvars, left - e, cur, out);
            }
            cur[var] = 0;
        }
        if nvars == 0 {
            return if d == 0 {
                vec![Monomial::ONE]
            } else {
                Vec::new()
            };
        }
        let mut out = Vec::new();
        rec(0, nvars, d, &mut [0; MAX_VARS], &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable is larger
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_basics() {
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert_eq!(m(&[1, 0]).cmp(&m(&[1, 0])), Ordering::Equal);
        assert!(m(&[0, 0, 1]) < m(&[1, 0, 0]));
    }

    // Reference comparator: compare degree, then the reversed exponent
    // vectors lexicographically with the sense flipped.
    fn reference(a: &[u32], b: &[u32]) -> Ordering {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        if da != db {
            return da.cmp(&db);
        }
        let ra: Vec<u32> = a.iter().rev().copied().collect();
        let rb: Vec<u32> = b.iter().rev().copied().collect();
        rb.cmp(&ra)
    }

    fn all_monomials(nvars: usize, maxdeg: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..nvars {
            let mut next = Vec::new();
            for v in &out {
                let used: u32 = v.iter().sum();
                for e in 0..=(maxdeg - used) {
                    let mut w = v.clone();
                    w.push(e);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn degree_two_in_three_vars_matches_reference() {
        let mons: Vec<_> = all_monomials(3, 2)
            .into_iter()
            .filter(|v| v.iter().sum::<u32>() == 2)
            .collect();
        let mut ours = mons.clone();
        ours.sort_by_key(|a| std::cmp::Reverse(m(a)));
        let mut theirs = mons;
        theirs.sort_by(|a, b| reference(b, a));
        assert_eq!(ours, theirs);
        // y^2 > xz
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
    }

    #[test]
    fn total_order_exhaustive() {
        let mons: Vec<Monomial> = all_monomials(3, 3).iter().map(|v| m(v)).collect();
        for a in &mons {
            for b in &mons {
                assert_eq!(a.cmp(b), b.cmp(a).reverse());
                assert_eq!(a.cmp(b) == Ordering::Equal, a == b);
                for c in &mons {
                    if a <= b && b <= c {
                        assert!(a <= c);
                    }
                }
            }
        }
    }

    #[test]
    fn enumerates_degree_pieces() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(2, 0), vec![Monomial::ONE]);
    }

    #[test]
    fn multiplicative_compatibility() {
        let mons: Vec<Monomial> = all_monomials(3, 2).iter().map(|v| m(v)).collect();
        for a in &mons {
            for b in &mons {
                for c in &mons {
                    assert_eq!(a.cmp(b), a.mul(c).cmp(&b.mul(c)));
                }
            }
        }
    }
}
