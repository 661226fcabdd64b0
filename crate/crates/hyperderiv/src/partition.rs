//! The index sets P(n, j) and their char-p multinomial weights.

/// An n-tuple (mu_1, ..., mu_n) of nonnegative integers with
/// sum mu_i = j and sum i*mu_i = n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    pub n: usize,
    pub j: usize,
    /// parts[i-1] = mu_i.
    pub parts: Vec<usize>,
}

/// Enumerate P(n, j) in lexicographic order of the tuple.
pub fn partitions(n: usize, j: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut parts = vec![0usize; n];
    rec(n, j, 1, n, j, &mut parts, &mut out);
    out
}

fn rec(
    n: usize,
    j: usize,
    i: usize,
    weight_left: usize,
    count_left: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if i > n {
        if weight_left == 0 && count_left == 0 {
            out.push(Partition {
                n,
                j,
                parts: parts.clone(),
            });
        }
        return;
    }
    // mu_i can be at most weight_left / i and at most count_left.
    let max = (weight_left / i).min(count_left);
    for mu in 0..=max {
        parts[i - 1] = mu;
        rec(n, j, i + 1, weight_left - i * mu, count_left - mu, parts, out);
    }
    parts[i - 1] = 0;
}

/// M_mu^j(m) = m(m-1)...(m-j+1) / (mu_1! ... mu_n!), computed exactly in
/// integers and reduced mod p. Returns 0 when j > m.
pub fn multinomial_charp(m: u64, mu: &Partition, p: u64) -> u64 {
    let j = mu.j as u64;
    if j > m {
        return 0;
    }
    let mut num: i128 = 1;
    for i in 0..j {
        num *= (m - i) as i128;
    }
    let mut den: i128 = 1;
    for &e in &mu.parts {
        for k in 1..=e {
            den *= k as i128;
        }
    }
    debug_assert_eq!(num % den, 0, "multinomial is not an integer");
    ((num / den).rem_euclid(p as i128)) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_n_j_membership() {
        for n in 1..=8usize {
            for j in 1..=n {
                let ps = partitions(n, j);
                for mu in &ps {
                    assert_eq!(mu.parts.iter().sum::<usize>(), j);
                    assert_eq!(
                        mu.parts.iter().enumerate().map(|(i, &e)| (i + 1) * e).sum::<usize>(),
                        n
                    );
                }
                // Lexicographic and duplicate-free.
                for w in ps.windows(2) {
                    assert!(w[0].parts < w[1].parts);
                }
            }
        }
    }

    #[test]
    fn known_small_sets() {
        // P(n, n) = {(n, 0, ..., 0)}; P(n, 1) = {(0, ..., 0, 1)}.
        let ps = partitions(4, 4);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].parts, vec![4, 0, 0, 0]);
        let ps = partitions(4, 1);
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].parts, vec![0, 0, 0, 1]);
        // P(4, 2) = {(1, 0, 1, 0), (0, 2, 0, 0)}.
        let ps = partitions(4, 2);
        assert_eq!(ps.len(), 2);
    }

    #[test]
    fn multinomial_values() {
        // mu with only mu_n = 1 and j = 1: M = m.
        let mu = Partition {
            n: 3,
            j: 1,
            parts: vec![0, 0, 1],
        };
        assert_eq!(multinomial_charp(7, &mu, 11), 7);
        // j > m gives 0.
        let mu2 = Partition {
            n: 2,
            j: 2,
            parts: vec![2, 0],
        };
        assert_eq!(multinomial_charp(1, &mu2, 5), 0);
        // m = 3, n = 2, mu = (2, 0): 3*2/2! = 3.
        assert_eq!(multinomial_charp(3, &mu2, 5), 3);
        assert_eq!(multinomial_charp(3, &mu2, 3), 0);
    }
}
