//! Binomial coefficients and ranking of k-subsets in colexicographic order.

/// Exact binomial coefficient, saturating at `u64::MAX`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Table of `C(i, j)` for `i <= n`, `j <= k`, used to rank k-subsets of
/// `0..n` via the combinatorial number system.
#[derive(Clone, Debug)]
pub struct SubsetRanker {
    k: usize,
    table: Vec<Vec<u64>>,
}

impl SubsetRanker {
    pub fn new(n: usize, k: usize) -> Self {
        let table = (0..=n)
            .map(|i| (0..=k).map(|j| binomial(i, j)).collect())
            .collect();
        SubsetRanker { k, table }
    }

    /// Number of k-subsets of the ground set.
    pub fn count(&self) -> u64 {
        self.table.last().map_or(0, |row| row[self.k])
    }

    /// Rank of a strictly increasing k-subset; colexicographic order.
    #[inline]
    pub fn rank(&self, sorted: &[usize]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        sorted
            .iter()
            .enumerate()
            .map(|(i, &c)| self.table[c][i + 1])
            .sum::<u64>() as usize
    }

    /// Inverse of [`rank`](Self::rank).
    pub fn unrank(&self, mut rank: u64) -> Vec<usize> {
        let mut out = vec![0; self.k];
        for i in (1..=self.k).rev() {
            let mut c = i - 1;
            while c + 1 < self.table.len() && self.table[c + 1][i] <= rank {
                c += 1;
            }
            rank -= self.table[c][i];
            out[i - 1] = c;
        }
        out
    }
}

/// Calls `f` with every k-subset of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(24, 4), 10626);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(15, 3), 455);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn rank_is_a_bijection() {
        let r = SubsetRanker::new(7, 3);
        let mut seen = vec![false; r.count() as usize];
        for_each_subset(7, 3, |s| {
            let i = r.rank(s);
            assert!(!seen[i]);
            seen[i] = true;
            assert_eq!(r.unrank(i as u64), s);
        });
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn subsets_edge_cases() {
        let mut n = 0;
        for_each_subset(4, 0, |s| {
            assert!(s.is_empty());
            n += 1;
        });
        assert_eq!(n, 1);
        let mut n = 0;
        for_each_subset(3, 3, |_| n += 1);
        assert_eq!(n, 1);
        for_each_subset(2, 3, |_| panic!("no subsets"));
    }
}
