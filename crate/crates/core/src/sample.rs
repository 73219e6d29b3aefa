//! Seeded sampling of generic evaluation points.

use num_traits::Zero;
use rand::Rng;

use crate::error::Result;
use crate::kz::system::ZPoint;
use crate::linalg::rational::{q, qf, Rational};
use crate::roots::Vector;

/// Attempts per sample before a resample-class error is reported.
pub const MAX_ATTEMPTS: usize = 10;

/// `num/den` in `[-bound, bound]` with `1 <= den <= 12`.
pub fn rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    let den = rng.gen_range(1..=12i64);
    let num = rng.gen_range(-bound * den..=bound * den);
    qf(num, den)
}

/// A random point of the trace-zero hyperplane in `Q^n`.
pub fn lambda<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vector {
    let raw: Vec<Rational> = (0..n).map(|_| rational(rng, 50)).collect();
    let mean = raw.iter().fold(q(0), |a, b| a + b) / q(n as i64);
    raw.iter().map(|x| x - &mean).collect()
}

/// A nonzero step `kappa`.
pub fn kappa<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    loop {
        let k = rational(rng, 10);
        if !k.is_zero() {
            return k;
        }
    }
}

/// Distinct `t_k` in `(0, 10]`, with `z_k = t_k^power`.
pub fn points<R: Rng + ?Sized>(rng: &mut R, count: usize, power: u32) -> ZPoint {
    let mut t: Vec<Rational> = Vec::with_capacity(count);
    while t.len() < count {
        let den = rng.gen_range(1..=12i64);
        let x = qf(rng.gen_range(1..=10 * den), den);
        if !t.contains(&x) {
            t.push(x);
        }
    }
    ZPoint::new(t, power)
}

/// Run `f` on fresh samples until it returns something other than a resample-class error.
pub fn with_resample<R: Rng + ?Sized, T>(
    rng: &mut R,
    mut f: impl FnMut(&mut R) -> Result<T>,
) -> Result<T> {
    let mut last = None;
    for _ in 0..MAX_ATTEMPTS {
        match f(rng) {
            Err(e) if e.is_resample() => last = Some(e),
            other => return other,
        }
    }
    Err(last.expect("at least one attempt"))
}
