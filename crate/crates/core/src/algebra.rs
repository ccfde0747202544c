//! Exact arithmetic for the value groups.
//!
//! Two kinds of group are supported: cyclic groups `Z_k` and the additive
//! groups of finite fields `GF(p^n)`. Elements are encoded as integers in
//! `[0, order)`: a residue for `Z_k`, and for `GF(p^n)` the base-`p` number
//! whose digits are the polynomial coefficients, constant term least
//! significant.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest supported group order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Operation tables are materialized up to this order.
const TABLE_ORDER: u32 = 256;

/// A group element, meaningful only together with its [`Group`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub const ZERO: Element = Element(0);

    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Cyclic {
        modulus: u32,
    },
    /// `modulus` holds `degree + 1` coefficients, constant term first, leading 1.
    Field {
        p: u32,
        degree: u32,
        modulus: Vec<u32>,
    },
}

struct GroupData {
    kind: GroupKind,
    order: u32,
    add: Option<Vec<u32>>,
    mul: Option<Vec<u32>>,
    primitive: OnceLock<Element>,
    log: OnceLock<Vec<u32>>,
}

/// A finite abelian value group: `Z_k` or the additive group of `GF(p^n)`.
///
/// Cheap to clone; equality compares the descriptor (kind and modulus).
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupData>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.kind == other.inner.kind
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({})", self.descriptor())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

impl FromStr for Group {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_group(s)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Parse a group descriptor: `z:<k>` or `gf:<p>:<n>[:<c0,c1,...,cn>]`.
///
/// Without explicit coefficients the field modulus is the lexicographically
/// smallest monic irreducible polynomial of degree `n` (constant term
/// compared first).
pub fn make_group(desc: &str) -> Result<Group> {
    let bad = || Error::BadDescriptor(desc.to_string());
    let parts: Vec<&str> = desc.trim().split(':').collect();
    let num = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    match parts.as_slice() {
        ["z", k] => Group::cyclic(num(k)?),
        ["gf", p, n] => {
            let (p, n) = (num(p)?, num(n)?);
            Group::field(p, n, None)
        }
        ["gf", p, n, coeffs] => {
            let (p, n) = (num(p)?, num(n)?);
            let coeffs = coeffs.split(',').map(num).collect::<Result<Vec<u64>>>()?;
            Group::field(p, n, Some(&coeffs))
        }
        _ => Err(bad()),
    }
}

impl Group {
    pub fn cyclic(k: u64) -> Result<Group> {
        if k < 2 {
            return Err(Error::ModulusTooSmall(k));
        }
        if k > MAX_ORDER {
            return Err(Error::GroupTooLarge(k));
        }
        Ok(Group::build(GroupKind::Cyclic { modulus: k as u32 }))
    }

    /// `GF(p^n)`, with the canonical modulus unless one is supplied.
    pub fn field(p: u64, n: u64, modulus: Option<&[u64]>) -> Result<Group> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::BadModulus { degree: 0 });
        }
        let order = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if n > 32 || order > MAX_ORDER as u128 {
            return Err(Error::GroupTooLarge(order.min(u64::MAX as u128) as u64));
        }
        let (p, n) = (p as u32, n as u32);
        let modulus = match modulus {
            Some(c) => {
                if c.len() != n as usize + 1
                    || c[n as usize] != 1
                    || c.iter().any(|&x| x >= p as u64)
                {
                    return Err(Error::BadModulus { degree: n });
                }
                let c: Vec<u32> = c.iter().map(|&x| x as u32).collect();
                if !poly::is_irreducible(&c, p) {
                    return Err(Error::ReducibleModulus { p });
                }
                c
            }
            None => poly::smallest_irreducible(p, n),
        };
        Ok(Group::build(GroupKind::Field {
            p,
            degree: n,
            modulus,
        }))
    }

    fn build(kind: GroupKind) -> Group {
        let order = match &kind {
            GroupKind::Cyclic { modulus } => *modulus,
            GroupKind::Field { p, degree, .. } => p.pow(*degree),
        };
        let mut data = GroupData {
            kind,
            order,
            add: None,
            mul: None,
            primitive: OnceLock::new(),
            log: OnceLock::new(),
        };
        if order <= TABLE_ORDER {
            let probe = Group {
                inner: Arc::new(GroupData {
                    kind: data.kind.clone(),
                    order,
                    add: None,
                    mul: None,
                    primitive: OnceLock::new(),
                    log: OnceLock::new(),
                }),
            };
            let mut add = Vec::with_capacity((order * order) as usize);
            for a in 0..order {
                for b in 0..order {
                    add.push(probe.add_slow(Element(a), Element(b)).0);
                }
            }
            data.add = Some(add);
            if probe.is_field() {
                let mut mul = Vec::with_capacity((order * order) as usize);
                for a in 0..order {
                    for b in 0..order {
                        mul.push(probe.mul_slow(Element(a), Element(b)).0);
                    }
                }
                data.mul = Some(mul);
            }
        }
        Group {
            inner: Arc::new(data),
        }
    }

    pub fn kind(&self) -> &GroupKind {
        &self.inner.kind
    }

    pub fn order(&self) -> u32 {
        self.inner.order
    }

    pub fn is_field(&self) -> bool {
        matches!(self.inner.kind, GroupKind::Field { .. })
    }

    /// Every element is its own negative (exponent 2), so flow validity
    /// does not depend on the orientation.
    pub fn has_exponent_two(&self) -> bool {
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => *modulus == 2,
            GroupKind::Field { p, .. } => *p == 2,
        }
    }

    /// Characteristic `p` for fields, modulus `k` for cyclic groups.
    pub fn base(&self) -> u32 {
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => *modulus,
            GroupKind::Field { p, .. } => *p,
        }
    }

    /// Number of base digits in an element: `n` for fields, 1 for `Z_k`.
    pub fn dimension(&self) -> u32 {
        match &self.inner.kind {
            GroupKind::Cyclic { .. } => 1,
            GroupKind::Field { degree, .. } => *degree,
        }
    }

    pub fn descriptor(&self) -> String {
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => format!("z:{modulus}"),
            GroupKind::Field { p, degree, modulus } => {
                if *modulus == poly::smallest_irreducible(*p, *degree) {
                    format!("gf:{p}:{degree}")
                } else {
                    let c: Vec<String> = modulus.iter().map(u32::to_string).collect();
                    format!("gf:{p}:{degree}:{}", c.join(","))
                }
            }
        }
    }

    pub fn zero(&self) -> Element {
        Element::ZERO
    }

    pub fn one(&self) -> Element {
        Element(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order()).map(Element)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Element> {
        (1..self.order()).map(Element)
    }

    pub fn element(&self, index: u32) -> Result<Element> {
        if index < self.order() {
            Ok(Element(index))
        } else {
            Err(Error::BadElement(index.to_string()))
        }
    }

    pub fn contains(&self, a: Element) -> bool {
        a.0 < self.order()
    }

    /// Base-`p` digits of `a`, constant term first (a single residue for `Z_k`).
    pub fn digits(&self, a: Element) -> Vec<u32> {
        let base = self.base();
        let mut x = a.0;
        (0..self.dimension())
            .map(|_| {
                let d = x % base;
                x /= base;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Element> {
        let base = self.base();
        if digits.len() != self.dimension() as usize || digits.iter().any(|&d| d >= base) {
            return Err(Error::BadElement(format!("{digits:?}")));
        }
        Ok(Element(
            digits.iter().rev().fold(0u32, |acc, &d| acc * base + d),
        ))
    }

    /// Comma-separated digits, constant term first.
    pub fn format_element(&self, a: Element) -> String {
        let d: Vec<String> = self.digits(a).iter().map(u32::to_string).collect();
        d.join(",")
    }

    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let digits = s
            .split(',')
            .map(|t| t.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<u32>, _>>()
            .map_err(|_| Error::BadElement(s.to_string()))?;
        self.from_digits(&digits)
            .map_err(|_| Error::BadElement(s.to_string()))
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        match &self.inner.add {
            Some(t) => Element(t[(a.0 * self.inner.order + b.0) as usize]),
            None => self.add_slow(a, b),
        }
    }

    fn add_slow(&self, a: Element, b: Element) -> Element {
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => {
                Element(((a.0 as u64 + b.0 as u64) % *modulus as u64) as u32)
            }
            GroupKind::Field { p, degree, .. } => {
                let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
                for _ in 0..*degree {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place = place.wrapping_mul(*p);
                }
                Element(out)
            }
        }
    }

    pub fn neg(&self, a: Element) -> Element {
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => Element((modulus - a.0) % modulus),
            GroupKind::Field { p, degree, .. } => {
                let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
                for _ in 0..*degree {
                    out += ((p - x % p) % p) * place;
                    x /= p;
                    place = place.wrapping_mul(*p);
                }
                Element(out)
            }
        }
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// The integer multiple `m·a`.
    pub fn scale(&self, m: u64, a: Element) -> Element {
        let m = m % self.base() as u64;
        match &self.inner.kind {
            GroupKind::Cyclic { modulus } => Element(((m * a.0 as u64) % *modulus as u64) as u32),
            GroupKind::Field { p, .. } => {
                let d: Vec<u32> = self
                    .digits(a)
                    .into_iter()
                    .map(|x| ((x as u64 * m) % *p as u64) as u32)
                    .collect();
                Element(d.iter().rev().fold(0, |acc, &x| acc * p + x))
            }
        }
    }

    /// Field multiplication.
    pub fn mul(&self, a: Element, b: Element) -> Result<Element> {
        if !self.is_field() {
            return Err(Error::NotAField { op: "mul" });
        }
        Ok(self.mul_field(a, b))
    }

    #[inline]
    pub(crate) fn mul_field(&self, a: Element, b: Element) -> Element {
        match &self.inner.mul {
            Some(t) => Element(t[(a.0 * self.inner.order + b.0) as usize]),
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: Element, b: Element) -> Element {
        let GroupKind::Field { p, modulus, .. } = &self.inner.kind else {
            unreachable!("mul_slow on a cyclic group")
        };
        let prod = poly::mul(&self.digits(a), &self.digits(b), *p);
        let rem = poly::rem(&prod, modulus, *p);
        let mut digits = vec![0u32; self.dimension() as usize];
        for (i, c) in rem.into_iter().enumerate() {
            digits[i] = c;
        }
        Element(digits.iter().rev().fold(0, |acc, &x| acc * p + x))
    }

    pub fn pow(&self, a: Element, mut e: u64) -> Result<Element> {
        if !self.is_field() {
            return Err(Error::NotAField { op: "pow" });
        }
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_field(acc, base);
            }
            base = self.mul_field(base, base);
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn inv(&self, a: Element) -> Result<Element> {
        if !self.is_field() {
            return Err(Error::NotAField { op: "inv" });
        }
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.pow(a, self.order() as u64 - 2)
    }

    pub fn div(&self, a: Element, b: Element) -> Result<Element> {
        Ok(self.mul_field(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero field element.
    pub fn multiplicative_order(&self, a: Element) -> Result<u64> {
        if !self.is_field() {
            return Err(Error::NotAField { op: "order" });
        }
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut x = a;
        let mut k = 1u64;
        while x != self.one() {
            x = self.mul_field(x, a);
            k += 1;
        }
        Ok(k)
    }

    /// The first element in lexicographic coefficient order (constant term
    /// compared first) whose multiplicative order is `p^n - 1`.
    pub fn primitive_element(&self) -> Result<Element> {
        if !self.is_field() {
            return Err(Error::NotAField {
                op: "primitive_element",
            });
        }
        Ok(*self.inner.primitive.get_or_init(|| {
            let target = self.order() as u64 - 1;
            let p = self.base();
            let n = self.dimension();
            // Lexicographic order with c0 most significant.
            let mut digits = vec![0u32; n as usize];
            loop {
                let a = self.from_digits(&digits).expect("digits in range");
                if !a.is_zero() && self.multiplicative_order(a).unwrap() == target {
                    return a;
                }
                let mut i = n as usize;
                loop {
                    assert!(i > 0, "field without a primitive element");
                    i -= 1;
                    digits[i] += 1;
                    if digits[i] < p {
                        break;
                    }
                    digits[i] = 0;
                }
            }
        }))
    }

    /// Discrete logarithm base [`Self::primitive_element`]: the unique
    /// `j` in `[0, p^n - 1)` with `b^j = a`.
    pub fn discrete_log(&self, a: Element) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let b = self.primitive_element()?;
        let table = self.inner.log.get_or_init(|| {
            let mut table = vec![u32::MAX; self.order() as usize];
            let mut x = self.one();
            for j in 0..self.order() - 1 {
                table[x.0 as usize] = j;
                x = self.mul_field(x, b);
            }
            table
        });
        Ok(table[a.0 as usize])
    }
}

/// A scalar acting on group elements: a field element (by multiplication)
/// or an endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Field(Element),
    Endo(Endomorphism),
}

impl Scalar {
    pub fn apply(&self, group: &Group, a: Element) -> Result<Element> {
        match self {
            Scalar::Field(r) => {
                if !group.contains(*r) {
                    return Err(Error::BadElement(r.0.to_string()));
                }
                group.mul(*r, a)
            }
            Scalar::Endo(s) => s.apply(group, a),
        }
    }
}

/// An endomorphism of `Z_k` (multiplication by a residue) or of the
/// elementary abelian group `(Z_p)^n` (an `n × n` matrix over `Z_p`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Endomorphism {
    Multiplier {
        modulus: u32,
        factor: u32,
    },
    Matrix {
        p: u32,
        dim: usize,
        entries: Vec<u32>,
    },
}

impl Endomorphism {
    pub fn multiplier(modulus: u32, factor: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus as u64));
        }
        Ok(Endomorphism::Multiplier {
            modulus,
            factor: (factor % modulus as u64) as u32,
        })
    }

    /// Row-major matrix; entries are reduced mod `p`.
    pub fn matrix(p: u32, rows: &[Vec<u32>]) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument(
                "matrix must be square and non-empty".into(),
            ));
        }
        Ok(Endomorphism::Matrix {
            p,
            dim,
            entries: rows.iter().flatten().map(|&x| x % p).collect(),
        })
    }

    pub fn identity(group: &Group) -> Self {
        match group.kind() {
            GroupKind::Cyclic { modulus } => Endomorphism::Multiplier {
                modulus: *modulus,
                factor: 1,
            },
            GroupKind::Field { p, degree, .. } => {
                let dim = *degree as usize;
                let entries = (0..dim * dim)
                    .map(|i| u32::from(i / dim == i % dim))
                    .collect();
                Endomorphism::Matrix {
                    p: *p,
                    dim,
                    entries,
                }
            }
        }
    }

    pub fn zero(group: &Group) -> Self {
        match group.kind() {
            GroupKind::Cyclic { modulus } => Endomorphism::Multiplier {
                modulus: *modulus,
                factor: 0,
            },
            GroupKind::Field { p, degree, .. } => {
                let dim = *degree as usize;
                Endomorphism::Matrix {
                    p: *p,
                    dim,
                    entries: vec![0; dim * dim],
                }
            }
        }
    }

    /// The matrix of multiplication by `r` on `GF(p^n)` viewed as `(Z_p)^n`.
    pub fn from_field_scalar(group: &Group, r: Element) -> Result<Self> {
        let GroupKind::Field { p, degree, .. } = group.kind() else {
            return Err(Error::NotAField {
                op: "from_field_scalar",
            });
        };
        let dim = *degree as usize;
        let mut entries = vec![0u32; dim * dim];
        for col in 0..dim {
            let mut basis = vec![0u32; dim];
            basis[col] = 1;
            let image = group.mul_field(r, group.from_digits(&basis)?);
            for (row, d) in group.digits(image).into_iter().enumerate() {
                entries[row * dim + col] = d;
            }
        }
        Ok(Endomorphism::Matrix {
            p: *p,
            dim,
            entries,
        })
    }

    fn compatible(&self, group: &Group) -> bool {
        match (self, group.kind()) {
            (Endomorphism::Multiplier { modulus, .. }, GroupKind::Cyclic { modulus: k }) => {
                modulus == k
            }
            (Endomorphism::Multiplier { modulus, .. }, GroupKind::Field { p, .. }) => modulus == p,
            (Endomorphism::Matrix { p, dim, .. }, GroupKind::Field { p: q, degree, .. }) => {
                p == q && *dim == *degree as usize
            }
            (Endomorphism::Matrix { p, dim, .. }, GroupKind::Cyclic { modulus }) => {
                p == modulus && *dim == 1
            }
        }
    }

    pub fn apply(&self, group: &Group, a: Element) -> Result<Element> {
        if !self.compatible(group) || !group.contains(a) {
            return Err(Error::ShapeMismatch {
                group: group.descriptor(),
            });
        }
        match self {
            Endomorphism::Multiplier { factor, .. } => Ok(group.scale(*factor as u64, a)),
            Endomorphism::Matrix { p, dim, entries } => {
                let x = group.digits(a);
                let y: Vec<u32> = (0..*dim)
                    .map(|r| {
                        (0..*dim)
                            .map(|c| entries[r * dim + c] as u64 * x[c] as u64)
                            .sum::<u64>() as u32
                            % p
                    })
                    .collect();
                group.from_digits(&y)
            }
        }
    }

    /// `self + other` in the endomorphism ring.
    pub fn plus(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (
                Endomorphism::Multiplier { modulus, factor },
                Endomorphism::Multiplier {
                    modulus: m2,
                    factor: f2,
                },
            ) if modulus == m2 => Ok(Endomorphism::Multiplier {
                modulus: *modulus,
                factor: (factor + f2) % modulus,
            }),
            (
                Endomorphism::Matrix { p, dim, entries },
                Endomorphism::Matrix {
                    p: p2,
                    dim: d2,
                    entries: e2,
                },
            ) if p == p2 && dim == d2 => Ok(Endomorphism::Matrix {
                p: *p,
                dim: *dim,
                entries: entries.iter().zip(e2).map(|(a, b)| (a + b) % p).collect(),
            }),
            _ => Err(Error::InvalidArgument("endomorphism shapes differ".into())),
        }
    }

    /// The composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (
                Endomorphism::Multiplier { modulus, factor },
                Endomorphism::Multiplier {
                    modulus: m2,
                    factor: f2,
                },
            ) if modulus == m2 => Ok(Endomorphism::Multiplier {
                modulus: *modulus,
                factor: ((*factor as u64 * *f2 as u64) % *modulus as u64) as u32,
            }),
            (
                Endomorphism::Matrix { p, dim, entries },
                Endomorphism::Matrix {
                    p: p2,
                    dim: d2,
                    entries: e2,
                },
            ) if p == p2 && dim == d2 => {
                let n = *dim;
                let mut out = vec![0u32; n * n];
                for r in 0..n {
                    for c in 0..n {
                        let s: u64 = (0..n)
                            .map(|k| entries[r * n + k] as u64 * e2[k * n + c] as u64)
                            .sum();
                        out[r * n + c] = (s % *p as u64) as u32;
                    }
                }
                Ok(Endomorphism::Matrix {
                    p: *p,
                    dim: n,
                    entries: out,
                })
            }
            _ => Err(Error::InvalidArgument("endomorphism shapes differ".into())),
        }
    }
}

/// Dense polynomials over `Z_p`, coefficient vectors with the constant term first.
pub(crate) mod poly {
    pub fn trim(mut a: Vec<u32>) -> Vec<u32> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        trim(out.into_iter().map(|x| x as u32).collect())
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap() as u64;
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead * c as u64) % p as u64;
                r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            r = trim(r);
        }
        r
    }

    /// Trial division by every monic polynomial of degree `1..=n/2`.
    pub fn is_irreducible(m: &[u32], p: u32) -> bool {
        let n = m.len() - 1;
        for d in 1..=n / 2 {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut div = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    div.push((c % p as u64) as u32);
                    c /= p as u64;
                }
                div.push(1);
                if rem(m, &div, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Lexicographically smallest monic irreducible polynomial of degree `n`,
    /// comparing the constant term first.
    pub fn smallest_irreducible(p: u32, n: u32) -> Vec<u32> {
        let n = n as usize;
        let mut c = vec![0u32; n];
        loop {
            let mut m = c.clone();
            m.push(1);
            if is_irreducible(&m, p) {
                return m;
            }
            let mut i = n;
            loop {
                assert!(i > 0, "no irreducible polynomial of degree {n} over Z_{p}");
                i -= 1;
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
            }
        }
    }
}
