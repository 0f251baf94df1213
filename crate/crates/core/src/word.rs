//! Reduced words in free groups.
//!
//! A [`Word`] is a freely reduced list of letters `x^{+1}` / `x^{-1}` over
//! named generators. Index-dependent operations (abelianization, the
//! class-two exterior image) go through an [`Alphabet`], which fixes the
//! coordinate order.
//!
//! Text form, used by every report and file format:
//!
//! ```text
//! word := term ("*" term)* | "1"
//! term := ident ("^" int)?
//! ```
//!
//! so `v5^-1*v3^-1*v2*v5*v2^-1*v3` and `a^2*b^-1`. The empty word prints
//! as `1`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A generator name. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

impl From<String> for Symbol {
    fn from(s: String) -> Self {
        Symbol(Arc::from(s))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

/// `[A-Za-z_][A-Za-z0-9_]*`
pub fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Letter {
    pub symbol: Symbol,
    /// Always `+1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(symbol: Symbol, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { symbol, exp }
    }

    pub fn inverse(&self) -> Letter {
        Letter { symbol: self.symbol.clone(), exp: -self.exp }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.exp == -other.exp
    }
}

/// A freely reduced word. No cyclic reduction is applied, so relators keep
/// their literal shape.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn generator(symbol: Symbol) -> Word {
        Word { letters: vec![Letter::new(symbol, 1)] }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|top| top.cancels(&l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Builds `s1^k1 s2^k2 ...` and reduces it.
    pub fn from_powers<I: IntoIterator<Item = (Symbol, i64)>>(powers: I) -> Word {
        Word::from_letters(powers.into_iter().flat_map(|(s, k)| {
            let exp = if k < 0 { -1 } else { 1 };
            std::iter::repeat_n(Letter::new(s, exp), k.unsigned_abs() as usize)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `[u, v] = u^-1 v^-1 u v`, reduced.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        Word::from_letters(
            u.inverse()
                .letters
                .into_iter()
                .chain(v.inverse().letters)
                .chain(u.letters.iter().cloned())
                .chain(v.letters.iter().cloned()),
        )
    }

    /// `g^-1 w g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.inverse().concat(self).concat(g)
    }

    /// Replaces every letter whose symbol has an image under `f`.
    pub fn substitute<F>(&self, f: F) -> Word
    where
        F: Fn(&Symbol) -> Option<Word>,
    {
        let mut out = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            match f(&l.symbol) {
                Some(w) if l.exp > 0 => out.extend(w.letters),
                Some(w) => out.extend(w.inverse().letters),
                None => out.push(l.clone()),
            }
        }
        Word::from_letters(out)
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> {
        self.letters.iter().map(|l| &l.symbol)
    }

    pub fn cyclically_reduced(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0usize, l.len());
        while j >= i + 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// Whether `self` and `other` define the same relator: their cyclic
    /// reductions agree up to rotation and inversion.
    pub fn same_relator(&self, other: &Word) -> bool {
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        let is_rotation = |x: &[Letter], y: &[Letter]| {
            let n = x.len();
            n == 0 || (0..n).any(|r| (0..n).all(|k| x[(k + r) % n] == y[k]))
        };
        is_rotation(&a.letters, &b.letters) || is_rotation(&a.letters, &b.inverse().letters)
    }

    /// Parses the text form. Symbols are not checked against any alphabet.
    pub fn parse(text: &str) -> Result<Word> {
        let s = text.trim();
        let offset = text.len() - text.trim_start().len();
        if s == "1" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::WordSyntax { position: offset, message: "empty word text".into() });
        }
        let mut powers = Vec::new();
        let mut pos = offset;
        for term in s.split('*') {
            let (name, exp) = match term.split_once('^') {
                Some((n, e)) => {
                    let k = parse_int(e).ok_or_else(|| Error::WordSyntax {
                        position: pos + n.len() + 1,
                        message: format!("bad exponent {e:?}"),
                    })?;
                    (n, k)
                }
                None => (term, 1),
            };
            if !is_ident(name) {
                return Err(Error::WordSyntax { position: pos, message: format!("bad generator name {name:?}") });
            }
            powers.push((Symbol::new(name), exp));
            pos += term.len() + 1;
        }
        Ok(Word::from_powers(powers))
    }
}

fn parse_int(s: &str) -> Option<i64> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == *l {
                run += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let k = run as i64 * l.exp as i64;
            if k == 1 {
                write!(f, "{}", l.symbol)?;
            } else {
                write!(f, "{}^{}", l.symbol, k)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Word::parse(&text).map_err(serde::de::Error::custom)
    }
}

/// Ordered set of generator names; the order fixes vector and matrix
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
    index: HashMap<Symbol, usize>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Alphabet>
    where
        I: IntoIterator<Item = S>,
        S: Into<Symbol>,
    {
        let mut a = Alphabet::default();
        for s in names {
            let s: Symbol = s.into();
            if !is_ident(s.as_str()) {
                return Err(Error::InvalidInput(format!("{s:?} is not a valid generator name")));
            }
            if a.index.insert(s.clone(), a.symbols.len()).is_some() {
                return Err(Error::InvalidInput(format!("duplicate generator {s}")));
            }
            a.symbols.push(s);
        }
        Ok(a)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.index.contains_key(s)
    }

    pub fn generator(&self, i: usize) -> Word {
        Word::generator(self.symbols[i].clone())
    }

    /// Free reduction of a raw `(symbol, ±1)` list, rejecting unknown symbols.
    pub fn reduce<I>(&self, raw: I) -> Result<Word>
    where
        I: IntoIterator<Item = (Symbol, i8)>,
    {
        let mut letters = Vec::new();
        for (s, e) in raw {
            if !self.contains(&s) {
                return Err(Error::InvalidInput(format!("unknown generator {s}")));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidInput(format!("letter exponent must be ±1, got {e}")));
            }
            letters.push(Letter::new(s, e));
        }
        Ok(Word::from_letters(letters))
    }

    pub fn check(&self, w: &Word) -> Result<()> {
        match w.symbols().find(|s| !self.contains(s)) {
            Some(s) => Err(Error::InvalidInput(format!("unknown generator {s} in {w}"))),
            None => Ok(()),
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let w = Word::parse(text)?;
        self.check(&w)?;
        Ok(w)
    }

    /// Exponent-sum vector.
    pub fn abelianize(&self, w: &Word) -> Result<AbelianVector> {
        let mut v = vec![0i64; self.len()];
        for l in w.letters() {
            let i = self
                .index_of(&l.symbol)
                .ok_or_else(|| Error::InvalidInput(format!("unknown generator {}", l.symbol)))?;
            v[i] += l.exp as i64;
        }
        Ok(AbelianVector(v))
    }

    /// Class of `w` in `γ₂(F)/γ₃(F) ≅ Λ²(ℤⁿ)`.
    ///
    /// Coordinate `(i, j)`, `i < j`, is the sum of `exp_p * exp_q` over
    /// position pairs `p < q` carrying generator `i` at `p` and `j` at `q`.
    /// For zero-sum words the mirrored count is its negative, so this is
    /// half the antisymmetrized count and `[x_i, x_j] ↦ e_i ∧ e_j`.
    pub fn exterior_image(&self, w: &Word) -> Result<ExteriorImage> {
        let ab = self.abelianize(w)?;
        if !ab.is_zero() {
            return Err(Error::NotInCommutatorSubgroup(w.to_string()));
        }
        let n = self.len();
        let mut img = ExteriorImage::zero(n);
        let mut prefix = vec![0i64; n];
        for l in w.letters() {
            let j = self.index[&l.symbol];
            let e = l.exp as i64;
            for (i, &c) in prefix.iter().enumerate().take(j) {
                if c != 0 {
                    img.coords[pair_index(n, i, j)] += c * e;
                }
            }
            prefix[j] += e;
        }
        Ok(img)
    }
}

/// Exponent sums, one per alphabet symbol.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianVector(pub Vec<i64>);

impl AbelianVector {
    pub fn zero(n: usize) -> Self {
        AbelianVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        AbelianVector(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl Add for AbelianVector {
    type Output = AbelianVector;
    fn add(self, rhs: Self) -> Self {
        AbelianVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for AbelianVector {
    type Output = AbelianVector;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for AbelianVector {
    type Output = AbelianVector;
    fn neg(self) -> Self {
        AbelianVector(self.0.into_iter().map(|a| -a).collect())
    }
}

/// Index of the pair `(i, j)`, `i < j < n`, in row-major upper-triangular order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Strictly upper triangular integer matrix in `Λ²(ℤⁿ)` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExteriorImage {
    dim: usize,
    coords: Vec<i64>,
}

impl ExteriorImage {
    pub fn zero(dim: usize) -> Self {
        ExteriorImage { dim, coords: vec![0; dim * dim.saturating_sub(1) / 2] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `a_{ij}` for `i < j`; antisymmetric extension otherwise.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.coords[pair_index(self.dim, i, j)],
            Greater => -self.coords[pair_index(self.dim, j, i)],
            Equal => 0,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&x| x == 0)
    }
}

impl Add for ExteriorImage {
    type Output = ExteriorImage;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        ExteriorImage { dim: self.dim, coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}
