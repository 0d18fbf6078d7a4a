use rug::Integer;

use crate::error::{Error, Result};

/// Exact `C(n, k)` by the multiplicative formula; every partial product is
/// itself a binomial coefficient so the divisions are exact.
pub fn binomial(n: u64, k: u64) -> Result<Integer> {
    if k > n {
        return Err(Error::usage(format!("binomial({n}, {k}): k exceeds n")));
    }
    let k = k.min(n - k);
    let mut acc = Integer::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}
