use crate::error::{Error, Result};

/// Jacobi polynomial `P_n^{(mu, nu)}(x)` by the three-term recurrence.
pub fn jacobi_poly(n: usize, mu: f64, nu: f64, x: f64) -> Result<f64> {
    if mu <= -1.0 || nu <= -1.0 || !mu.is_finite() || !nu.is_finite() {
        return Err(Error::Parameter(format!(
            "Jacobi parameters must exceed -1, got ({mu}, {nu})"
        )));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let p1 = (mu + 1.0) + 0.5 * (mu + nu + 2.0) * (x - 1.0);
    if n == 1 {
        return Ok(p1);
    }

    let ab = mu + nu;
    let ab_sq_diff = mu * mu - nu * nu;
    let (mut prev, mut curr) = (1.0, p1);
    for k in 2..=n {
        let k = k as f64;
        let s = 2.0 * k + ab;
        let denom = 2.0 * k * (k + ab) * (s - 2.0);
        let a = (s - 1.0) * (s * (s - 2.0) * x + ab_sq_diff);
        let b = 2.0 * (k + mu - 1.0) * (k + nu - 1.0) * s;
        let next = (a * curr - b * prev) / denom;
        prev = curr;
        curr = next;
    }
    Ok(curr)
}
