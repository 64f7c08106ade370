//! Arithmetic on `Z_n` and the map families that generate orbital networks.
//!
//! Every map is described symbolically by a [`MapSpec`]. Parameters are kept in
//! canonical residue form `[0, n-1]` so that a spec list identifies its graph.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ring size `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            Err(Error::ZeroModulus)
        } else {
            Ok(Modulus(n))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical representative of a signed integer.
    #[inline]
    pub fn reduce(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    /// Side length `m` when `n = m^2`.
    pub fn square_side(self) -> Option<u64> {
        let m = isqrt(self.0);
        (m * m == self.0).then_some(m)
    }
}

impl TryFrom<u64> for Modulus {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Modulus::new(n)
    }
}

impl From<Modulus> for u64 {
    fn from(m: Modulus) -> u64 {
        m.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub(crate) fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

/// Square-and-multiply `base^exp mod n`.
pub fn pow_mod(base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % n;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, n);
        }
        b = mul_mod(b, b, n);
        exp >>= 1;
    }
    result
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = 7u64;
    let mut step = [4u64, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += step.next().unwrap();
    }
    true
}

/// Symbolic generator map on `Z_n` (or `Z_m x Z_m` for Hénon maps).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MapSpec {
    /// `x -> x^2 + a`
    Quadratic { a: u64 },
    /// `x -> a x + b`
    Affine { a: u64, b: u64 },
    /// `x -> g^x + c`
    Exponential { g: u64, c: u64 },
    /// `x -> floor(x^alpha) + c`
    FloorPower { alpha: f64, c: u64 },
    /// `(x, y) -> (x^2 + c - y, b x)` on `Z_m^2`, vertex `x + m y`.
    Henon { c: u64, b: u64 },
    /// Seeded uniform random permutation, see [`seeded_permutation`].
    Permutation { seed: u64 },
}

impl MapSpec {
    /// Reduce all residue parameters into canonical form for `n`.
    ///
    /// Hénon parameters live in `Z_m` where `n = m^2`; for a non-square `n`
    /// they are reduced modulo `n` and the graph builder rejects the spec.
    pub fn normalized(&self, n: Modulus) -> Result<MapSpec> {
        let r = |v: u64| v % n.get();
        Ok(match *self {
            MapSpec::Quadratic { a } => MapSpec::Quadratic { a: r(a) },
            MapSpec::Affine { a, b } => MapSpec::Affine { a: r(a), b: r(b) },
            MapSpec::Exponential { g, c } => MapSpec::Exponential { g: r(g), c: r(c) },
            MapSpec::FloorPower { alpha, c } => {
                check_alpha(alpha)?;
                MapSpec::FloorPower { alpha, c: r(c) }
            }
            MapSpec::Henon { c, b } => {
                let m = n.square_side().unwrap_or(n.get());
                MapSpec::Henon { c: c % m, b: b % m }
            }
            MapSpec::Permutation { seed } => MapSpec::Permutation { seed },
        })
    }

    pub fn is_henon(&self) -> bool {
        matches!(self, MapSpec::Henon { .. })
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "floor-power exponent must be finite and positive, got {alpha}"
        )))
    }
}

impl fmt::Display for MapSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapSpec::Quadratic { a } => write!(f, "x^2+{a}"),
            MapSpec::Affine { a, b } => write!(f, "{a}*x+{b}"),
            MapSpec::Exponential { g, c } => write!(f, "{g}^x+{c}"),
            MapSpec::FloorPower { alpha, c } => write!(f, "floor(x^{alpha})+{c}"),
            MapSpec::Henon { c, b } => write!(f, "henon({c},{b})"),
            MapSpec::Permutation { seed } => write!(f, "perm({seed})"),
        }
    }
}

/// Values of `floor(x^alpha)` are only trusted while `n * x^alpha < 2^53`.
const EXACT_FLOAT_BOUND: f64 = 9_007_199_254_740_992.0;

fn floor_power(alpha: f64, x: u64, n: u64) -> Result<u64> {
    if alpha.fract() == 0.0 && alpha <= u64::MAX as f64 {
        return Ok(pow_mod(x, alpha as u64, n));
    }
    if x == 0 {
        return Ok(0);
    }
    let v = (x as f64).powf(alpha);
    let scaled = v * n as f64;
    if !scaled.is_finite() || scaled >= EXACT_FLOAT_BOUND {
        return Err(Error::Precision { alpha, x, n });
    }
    Ok((v.floor() as u64) % n)
}

fn henon_step(c: u64, b: u64, v: u64, m: u64) -> u64 {
    let (x, y) = (v % m, v / m);
    let nx = (mul_mod(x, x, m) + c % m + (m - y % m)) % m;
    let ny = mul_mod(b, x, m);
    nx + m * ny
}

/// `T(x) mod n` for one point.
///
/// For [`MapSpec::Permutation`] this materializes the whole table, so
/// callers evaluating many points should use [`map_images`].
pub fn apply_map(spec: &MapSpec, x: u64, n: Modulus) -> Result<u64> {
    let nv = n.get();
    if x >= nv {
        return Err(Error::InvalidParameter(format!("{x} is not a residue mod {nv}")));
    }
    Ok(match *spec {
        MapSpec::Quadratic { a } => add_mod(mul_mod(x, x, nv), a, nv),
        MapSpec::Affine { a, b } => add_mod(mul_mod(a % nv, x, nv), b, nv),
        MapSpec::Exponential { g, c } => add_mod(pow_mod(g, x, nv), c, nv),
        MapSpec::FloorPower { alpha, c } => {
            check_alpha(alpha)?;
            add_mod(floor_power(alpha, x, nv)?, c, nv)
        }
        MapSpec::Henon { c, b } => {
            let m = n.square_side().ok_or(Error::NonSquareHenon(nv))?;
            henon_step(c, b, x, m)
        }
        MapSpec::Permutation { seed } => seeded_permutation(seed, n)[x as usize],
    })
}

/// Images `T(0), ..., T(n-1)`.
pub fn map_images(spec: &MapSpec, n: Modulus) -> Result<Vec<u64>> {
    match *spec {
        MapSpec::Permutation { seed } => Ok(seeded_permutation(seed, n)),
        MapSpec::Henon { .. } if n.square_side().is_none() => Err(Error::NonSquareHenon(n.get())),
        _ => (0..n.get()).map(|x| apply_map(spec, x, n)).collect(),
    }
}

/// Parse one map in the textual grammar
/// `x^2+A | A*x+B | G^x+C | floor(x^ALPHA)+C | perm(SEED) | henon(C,B)`.
///
/// Whitespace is ignored, constants may be negative or omitted, and residues
/// are reduced modulo `n`. `x+B` is accepted as shorthand for `1*x+B`.
pub fn parse_map_spec(text: &str, n: Modulus) -> Result<MapSpec> {
    let mut p = SpecParser::new(text);
    let spec = p.spec(n)?;
    p.end()?;
    spec.normalized(n)
}

/// Parse a `;`-separated list of map specs.
pub fn parse_map_list(text: &str, n: Modulus) -> Result<Vec<MapSpec>> {
    let mut offset = 0;
    let mut out = Vec::new();
    for part in text.split(';') {
        if !part.trim().is_empty() {
            out.push(parse_map_spec(part, n).map_err(|e| match e {
                Error::Syntax { position, message } => Error::Syntax {
                    position: position + offset,
                    message,
                },
                other => other,
            })?);
        }
        offset += part.len() + 1;
    }
    Ok(out)
}

struct SpecParser<'a> {
    toks: Vec<(usize, char)>,
    pos: usize,
    len: usize,
    _src: &'a str,
}

impl<'a> SpecParser<'a> {
    fn new(src: &'a str) -> Self {
        let toks = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        SpecParser { toks, pos: 0, len: src.len(), _src: src }
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        for c in s.chars() {
            if !self.eat(c) {
                return self.err(format!("expected '{s}'"));
            }
        }
        Ok(())
    }

    fn lookahead(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(i, c)| self.toks.get(self.pos + i).map(|t| t.1) == Some(c))
    }

    fn digits(&mut self) -> Result<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            return self.err("expected a number");
        }
        Ok(s)
    }

    fn signed(&mut self) -> Result<i128> {
        let start = self.pos;
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits()?;
        match d.parse::<i128>() {
            Ok(v) => Ok(if neg { -v } else { v }),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn unsigned(&mut self) -> Result<u64> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse::<u64>().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn real(&mut self) -> Result<f64> {
        let start = self.pos;
        let mut s = self.digits()?;
        if self.eat('.') {
            s.push('.');
            s.push_str(&self.digits()?);
        }
        s.parse::<f64>().or_else(|_| {
            self.pos = start;
            self.err("malformed real number")
        })
    }

    /// Optional trailing `+C` / `-C`.
    fn constant(&mut self) -> Result<i128> {
        match self.peek() {
            Some('+') | Some('-') => self.signed(),
            _ => Ok(0),
        }
    }

    fn spec(&mut self, n: Modulus) -> Result<MapSpec> {
        let r = |v: i128| n.reduce(v);
        if self.lookahead("perm(") {
            self.expect("perm(")?;
            let seed = self.unsigned()?;
            self.expect(")")?;
            return Ok(MapSpec::Permutation { seed });
        }
        if self.lookahead("henon(") {
            self.expect("henon(")?;
            let c = self.signed()?;
            self.expect(",")?;
            let b = self.signed()?;
            self.expect(")")?;
            let m = Modulus::new(n.square_side().unwrap_or(n.get()))?;
            return Ok(MapSpec::Henon { c: m.reduce(c), b: m.reduce(b) });
        }
        if self.lookahead("floor(") {
            self.expect("floor(x^")?;
            let alpha = self.real()?;
            if alpha <= 0.0 {
                return self.err("exponent must be positive");
            }
            self.expect(")")?;
            let c = self.constant()?;
            return Ok(MapSpec::FloorPower { alpha, c: r(c) });
        }
        if self.lookahead("x^2") {
            self.expect("x^2")?;
            let a = self.constant()?;
            return Ok(MapSpec::Quadratic { a: r(a) });
        }
        if self.eat('x') {
            let b = self.constant()?;
            return Ok(MapSpec::Affine { a: 1 % n.get(), b: r(b) });
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == '-' || c == '+' => {}
            _ => return self.err("expected a map"),
        }
        let lead = self.signed()?;
        if self.eat('*') {
            self.expect("x")?;
            let b = self.constant()?;
            Ok(MapSpec::Affine { a: r(lead), b: r(b) })
        } else if self.eat('^') {
            self.expect("x")?;
            let c = self.constant()?;
            Ok(MapSpec::Exponential { g: r(lead), c: r(c) })
        } else {
            self.err("expected '*x' or '^x'")
        }
    }

    fn end(&self) -> Result<()> {
        if self.pos == self.toks.len() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

/// Prime factorization data for `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationSummary {
    pub n: u64,
    /// `(p, k)` with `p^k || n`, ascending in `p`.
    pub prime_powers: Vec<(u64, u32)>,
    pub distinct_primes: Vec<u64>,
    pub omega: usize,
    /// Carmichael function, the exponent of `(Z_n)^*`.
    pub carmichael: u64,
}

/// Trial division; worst case is `O(sqrt(n))` divisions, about 3e9 for a
/// prime near `2^63`. Desk-scale moduli are far below that.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut take = |n: &mut u64, p: u64| {
        let mut k = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            k += 1;
        }
        if k > 0 {
            out.push((p, k));
        }
    };
    take(&mut n, 2);
    take(&mut n, 3);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        take(&mut n, d);
        take(&mut n, d + 2);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn prime_power_carmichael(p: u64, k: u32) -> u64 {
    match (p, k) {
        (2, 1) => 1,
        (2, 2) => 2,
        (2, k) => 1u64 << (k - 2),
        (p, k) => p.pow(k - 1) * (p - 1),
    }
}

pub fn factor_summary(n: u64) -> Result<FactorizationSummary> {
    if n == 0 || n > i64::MAX as u64 {
        return Err(Error::InvalidParameter(format!("{n} outside [1, 2^63-1]")));
    }
    let prime_powers = factorize(n);
    let distinct_primes: Vec<u64> = prime_powers.iter().map(|&(p, _)| p).collect();
    let carmichael = prime_powers
        .iter()
        .fold(1u64, |acc, &(p, k)| lcm(acc, prime_power_carmichael(p, k)));
    Ok(FactorizationSummary {
        n,
        omega: distinct_primes.len(),
        distinct_primes,
        prime_powers,
        carmichael,
    })
}

pub fn carmichael(n: u64) -> Result<u64> {
    factor_summary(n).map(|f| f.carmichael)
}

/// Smallest `t >= 1` with `g^t = 1 (mod n)`.
pub fn multiplicative_order(g: u64, n: Modulus) -> Result<u64> {
    let nv = n.get();
    if nv == 1 {
        return Ok(1);
    }
    let g = g % nv;
    if gcd(g, nv) != 1 {
        return Err(Error::NotAUnit { g, n: nv });
    }
    let mut t = carmichael(nv)?;
    for (q, _) in factorize(t) {
        while t % q == 0 && pow_mod(g, t / q, nv) == 1 {
            t /= q;
        }
    }
    Ok(t)
}

/// Number of idempotents `x^2 = x` in `Z_n`, by direct scan.
pub fn squaring_fixed_points(n: Modulus) -> u64 {
    let nv = n.get();
    (0..nv).filter(|&x| mul_mod(x, x, nv) == x % nv).count() as u64
}

/// Uniform random permutation of `0..n`.
///
/// The generator is ChaCha8 (`rand_chacha`) seeded with
/// `ChaCha8Rng::seed_from_u64(seed)`. The table starts as the identity and a
/// Fisher–Yates pass runs from the top: for `i = n-1, ..., 1` it swaps slot
/// `i` with slot `j`, where `j` is drawn with `gen_range(0..=i)` over `u64`.
/// Using `u64` ranges keeps the draw sequence independent of pointer width.
pub fn seeded_permutation(seed: u64, n: Modulus) -> Vec<u64> {
    let mut table: Vec<u64> = (0..n.get()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in (1..table.len()).rev() {
        let j = rng.gen_range(0..=i as u64) as usize;
        table.swap(i, j);
    }
    table
}
