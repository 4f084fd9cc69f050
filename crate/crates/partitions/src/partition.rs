use serde::Serialize;

/// Weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Partition(Vec<i64>);

impl Partition {
    /// Panics unless `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<i64>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` for `i >= 1`, zero past the last part.
    pub fn part(&self, i: usize) -> i64 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: i64) -> Vec<Partition> {
    fn go(n: i64, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n >= 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn partitions_up_to(n: i64) -> Vec<Partition> {
    (0..=n).flat_map(partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(partitions(0), vec![Partition(vec![])]);
        let p4: Vec<Vec<i64>> = partitions(4).into_iter().map(|p| p.0).collect();
        assert_eq!(p4, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert!(partitions(-1).is_empty());
    }
}
