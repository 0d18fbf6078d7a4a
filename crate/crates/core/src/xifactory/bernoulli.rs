use rug::{Integer, Rational};

use crate::mpseries::binomial;

/// Even-index Bernoulli numbers `B_0, B_2, ..., B_{2(count-1)}` as exact
/// rationals, from `sum_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_even(count: usize) -> Vec<Rational> {
    if count == 0 {
        return Vec::new();
    }
    let top = 2 * (count - 1);
    // all[j] = B_j for j <= top; odd entries beyond B_1 vanish.
    let mut all: Vec<Rational> = Vec::with_capacity(top + 1);
    all.push(Rational::from(1));
    for m in 1..=top {
        if m > 1 && m % 2 == 1 {
            all.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        for (j, b) in all.iter().enumerate() {
            if j > 1 && j % 2 == 1 {
                continue;
            }
            let c: Integer = binomial(m as u64 + 1, j as u64).expect("j <= m");
            acc += Rational::from(b * &c);
        }
        let denom = Integer::from(m + 1);
        all.push(-(acc / denom));
    }
    all.into_iter().step_by(2).collect()
}
