use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::matrix::SymRatMatrix;
use super::poly::IntPolynomial;

/// Characteristic polynomial `det(xI − M)` together with the scale `d` such that
/// the polynomial is that of `d·M` (so its roots are `d` times the eigenvalues of `M`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledCharPoly {
    pub poly: IntPolynomial,
    pub scale: BigInt,
}

/// `det(xI − M)` for an integer matrix; for rational input the denominators are cleared
/// and the scale recorded.
pub fn char_poly(m: &SymRatMatrix) -> ScaledCharPoly {
    let (rows, scale) = m.integer_scaled();
    ScaledCharPoly { poly: char_poly_int(&rows), scale }
}

/// Values `det(xI − M) mod p` at `x = 0..=n`, interpolated and lifted by CRT.
pub fn char_poly_int(m: &[Vec<BigInt>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::from_i64(&[1]);
    }
    let bits = coefficient_bits(m);
    let mut modulus = BigInt::one();
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n];
    let target = BigInt::one() << (bits + 2);
    for &p in primes() {
        if modulus >= target {
            break;
        }
        let reduced: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|v| mod_big(v, p)).collect()).collect();
        let coeffs = char_poly_mod(&reduced, p);
        // Garner step: acc ≡ previous (mod modulus), acc ≡ coeffs (mod p).
        let inv = inv_mod(mod_big(&modulus, p), p);
        for k in 0..n {
            let cur = mod_big(&acc[k], p);
            let t = mul_mod(sub_mod(coeffs[k], cur, p), inv, p);
            acc[k] += &modulus * BigInt::from(t);
        }
        modulus *= BigInt::from(p);
    }
    assert!(modulus >= target, "prime table too small for coefficient bound");
    let half = &modulus >> 1;
    let mut out: Vec<BigInt> = acc.into_iter().map(|c| if c > half { c - &modulus } else { c }).collect();
    out.push(BigInt::one());
    IntPolynomial::new(out)
}

/// Bits needed for every coefficient: |c_k| ≤ C(n,k)·R^k ≤ (1+R)^n with R the largest row 2-norm.
fn coefficient_bits(m: &[Vec<BigInt>]) -> u64 {
    let n = m.len() as f64;
    let r2 = m
        .iter()
        .map(|row| row.iter().map(|v| big_to_f64_sq(v)).sum::<f64>())
        .fold(0.0f64, f64::max);
    let r = r2.sqrt();
    (n * (1.0 + r).log2()).ceil() as u64 + 2
}

fn big_to_f64_sq(v: &BigInt) -> f64 {
    let f = v.to_f64().unwrap_or(f64::INFINITY);
    f * f
}

fn char_poly_mod(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    // values at x = 0..=n
    let ys: Vec<u64> = (0..=n as u64)
        .map(|x| {
            let a: Vec<Vec<u64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let v = neg_mod(m[i][j], p);
                            if i == j { add_mod(v, x % p, p) } else { v }
                        })
                        .collect()
                })
                .collect();
            det_mod(a, p)
        })
        .collect();
    let full = interpolate(&ys, p);
    full[..n].to_vec()
}

fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| a[r][k] != 0) else {
            return 0;
        };
        if piv != k {
            a.swap(piv, k);
            det = neg_mod(det, p);
        }
        det = mul_mod(det, a[k][k], p);
        let inv = inv_mod(a[k][k], p);
        for i in k + 1..n {
            if a[i][k] == 0 {
                continue;
            }
            let f = mul_mod(a[i][k], inv, p);
            for j in k + 1..n {
                a[i][j] = sub_mod(a[i][j], mul_mod(f, a[k][j], p), p);
            }
        }
    }
    det
}

/// Coefficients (constant first) of the polynomial through `(x, ys[x])`, `x = 0..len`.
fn interpolate(ys: &[u64], p: u64) -> Vec<u64> {
    let n = ys.len();
    // Newton divided differences on nodes 0..n-1.
    let mut dd = ys.to_vec();
    for level in 1..n {
        let inv = inv_mod(level as u64 % p, p);
        for i in (level..n).rev() {
            dd[i] = mul_mod(sub_mod(dd[i], dd[i - 1], p), inv, p);
        }
    }
    // Expand Σ dd[k] Π_{j<k} (x − j) by Horner.
    let mut poly = vec![0u64; n];
    for k in (0..n).rev() {
        // poly <- poly * (x - k) + dd[k]
        let mut next = vec![0u64; n];
        for i in 0..n {
            if poly[i] == 0 {
                continue;
            }
            if i + 1 < n {
                next[i + 1] = add_mod(next[i + 1], poly[i], p);
            }
            next[i] = sub_mod(next[i], mul_mod(poly[i], k as u64 % p, p), p);
        }
        next[0] = add_mod(next[0], dd[k], p);
        poly = next;
    }
    poly
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}

fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 { 0 } else { p - a }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a != 0, "inverse of zero");
    pow_mod(a, p - 2, p)
}

fn mod_big(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // deterministic for 64-bit inputs
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending primes below 2^62; enough for coefficient bounds of several thousand bits.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut c = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

/// Faddeev–LeVerrier over the integers; O(n⁴), kept as an independent oracle.
pub fn char_poly_faddeev(m: &[Vec<BigInt>]) -> IntPolynomial {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    let mut mk: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    s += &m[i][l] * &mk[l][j];
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                tr += &m[i][l] * &next[l][i];
            }
        }
        coeffs[n - k] = -tr / BigInt::from(k);
        mk = next;
    }
    IntPolynomial::new(coeffs)
}
