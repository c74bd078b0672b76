//! Sparse truncated formal power series in two families of commuting
//! variables `{s_i}` and `{t_j}`.
//!
//! A variable of index `i` has weight `i`; a monomial carries an s-weight and
//! a t-weight, and a series keeps only monomials with s-weight `≤ Ws` and
//! t-weight `≤ Wt`. Variables may carry a `+`/`-` tag so the signed families
//! `s_{i,±}`, `t_{j,±}` live in the same ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    None,
    Pos,
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub index: u32,
    pub tag: Tag,
}

impl Var {
    pub fn plain(index: u32) -> Self {
        Var {
            index,
            tag: Tag::None,
        }
    }

    pub fn signed(index: u32, positive: bool) -> Self {
        Var {
            index,
            tag: if positive { Tag::Pos } else { Tag::Neg },
        }
    }

    fn label(&self) -> String {
        match self.tag {
            Tag::None => self.index.to_string(),
            Tag::Pos => format!("{}+", self.index),
            Tag::Neg => format!("{}-", self.index),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    S,
    T,
}

/// `∏ s_v^{a_v} · ∏ t_w^{b_w}` with positive exponents, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MonomialKey {
    s: Vec<(Var, u32)>,
    t: Vec<(Var, u32)>,
}

fn normalize(mut v: Vec<(Var, u32)>) -> Vec<(Var, u32)> {
    v.sort();
    let mut out: Vec<(Var, u32)> = Vec::with_capacity(v.len());
    for (var, e) in v {
        match out.last_mut() {
            Some((w, f)) if *w == var => *f += e,
            _ => out.push((var, e)),
        }
    }
    out.retain(|&(_, e)| e > 0);
    out
}

fn merge(a: &[(Var, u32)], b: &[(Var, u32)]) -> Vec<(Var, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn weight(v: &[(Var, u32)]) -> u32 {
    v.iter().map(|(var, e)| var.index * e).sum()
}

impl MonomialKey {
    pub fn one() -> Self {
        MonomialKey::default()
    }

    pub fn new(s: Vec<(Var, u32)>, t: Vec<(Var, u32)>) -> Self {
        MonomialKey {
            s: normalize(s),
            t: normalize(t),
        }
    }

    /// Untagged key from `(index, exponent)` pairs.
    pub fn plain(s: &[(u32, u32)], t: &[(u32, u32)]) -> Self {
        let lift = |v: &[(u32, u32)]| v.iter().map(|&(i, e)| (Var::plain(i), e)).collect();
        MonomialKey::new(lift(s), lift(t))
    }

    pub fn single(family: Family, var: Var, exp: u32) -> Self {
        match family {
            Family::S => MonomialKey::new(vec![(var, exp)], vec![]),
            Family::T => MonomialKey::new(vec![], vec![(var, exp)]),
        }
    }

    /// `s^{c(λ)} t^{c(ν)}`: one `s_i` per part `i` of `λ`, one `t_j` per part of `ν`.
    pub fn from_partitions(lambda: &Partition, nu: &Partition) -> Self {
        let from = |p: &Partition| {
            p.multiplicities()
                .into_iter()
                .map(|(i, a)| (Var::plain(i as u32), a as u32))
                .collect()
        };
        MonomialKey::new(from(lambda), from(nu))
    }

    pub fn s_part(&self) -> &[(Var, u32)] {
        &self.s
    }

    pub fn t_part(&self) -> &[(Var, u32)] {
        &self.t
    }

    pub fn s_weight(&self) -> u32 {
        weight(&self.s)
    }

    pub fn t_weight(&self) -> u32 {
        weight(&self.t)
    }

    pub fn is_one(&self) -> bool {
        self.s.is_empty() && self.t.is_empty()
    }

    pub fn times(&self, other: &MonomialKey) -> MonomialKey {
        MonomialKey {
            s: merge(&self.s, &other.s),
            t: merge(&self.t, &other.t),
        }
    }

    fn within(&self, ws: u32, wt: u32) -> bool {
        self.s_weight() <= ws && self.t_weight() <= wt
    }
}

impl fmt::Display for MonomialKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, part) in [("s", &self.s), ("t", &self.t)] {
            for (var, e) in part.iter() {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                match var.tag {
                    Tag::None => write!(f, "{name}{}", var.index)?,
                    Tag::Pos => write!(f, "{name}{}+", var.index)?,
                    Tag::Neg => write!(f, "{name}{}-", var.index)?,
                }
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

struct ExpMap<'a>(&'a [(Var, u32)]);

impl Serialize for ExpMap<'_> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = ser.serialize_map(Some(self.0.len()))?;
        for (var, e) in self.0 {
            m.serialize_entry(&var.label(), e)?;
        }
        m.end()
    }
}

impl Serialize for MonomialKey {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("MonomialKey", 2)?;
        st.serialize_field("s", &ExpMap(&self.s))?;
        st.serialize_field("t", &ExpMap(&self.t))?;
        st.end()
    }
}

/// Sparse series truncated at s-weight `Ws` and t-weight `Wt`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<C> {
    ws: u32,
    wt: u32,
    terms: BTreeMap<MonomialKey, C>,
}

impl<C: Scalar> TruncatedSeries<C> {
    pub fn zero(ws: u32, wt: u32) -> Self {
        TruncatedSeries {
            ws,
            wt,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ws: u32, wt: u32) -> Self {
        Self::constant(ws, wt, C::one())
    }

    pub fn constant(ws: u32, wt: u32, c: C) -> Self {
        Self::monomial(ws, wt, MonomialKey::one(), c)
    }

    pub fn monomial(ws: u32, wt: u32, key: MonomialKey, c: C) -> Self {
        let mut out = Self::zero(ws, wt);
        out.add_term(key, c);
        out
    }

    pub fn variable(ws: u32, wt: u32, family: Family, var: Var) -> Self {
        Self::monomial(ws, wt, MonomialKey::single(family, var, 1), C::one())
    }

    pub fn truncation(&self) -> (u32, u32) {
        (self.ws, self.wt)
    }

    pub fn terms(&self) -> &BTreeMap<MonomialKey, C> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · key`; silently dropped beyond the truncation.
    pub fn add_term(&mut self, key: MonomialKey, c: C) {
        if c.is_zero() || !key.within(self.ws, self.wt) {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, key: &MonomialKey) -> C {
        self.terms.get(key).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&MonomialKey::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.ws, self.wt);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Same terms, cut down (or declared up) to a new truncation.
    pub fn with_truncation(&self, ws: u32, wt: u32) -> Self {
        let mut out = Self::zero(ws, wt);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.truncation(),
            other.truncation(),
            "series with different truncations"
        );
    }

    /// Cauchy product. Large operands are split across worker threads.
    pub fn multiply(&self, other: &Self) -> Self {
        self.check_same(other);
        let (ws, wt) = (self.ws, self.wt);
        let right: Vec<(&MonomialKey, &C)> = other.terms.iter().collect();
        let partial = |chunk: &[(&MonomialKey, &C)]| {
            let mut acc = Self::zero(ws, wt);
            for (ka, va) in chunk {
                let (sa, ta) = (ka.s_weight(), ka.t_weight());
                for (kb, vb) in &right {
                    if sa + kb.s_weight() > ws || ta + kb.t_weight() > wt {
                        continue;
                    }
                    acc.add_term(ka.times(kb), (*va).clone() * (*vb).clone());
                }
            }
            acc
        };
        let left: Vec<(&MonomialKey, &C)> = self.terms.iter().collect();
        if left.len() * right.len() < 4096 {
            return partial(&left);
        }
        left.par_chunks(64)
            .map(partial)
            .reduce(|| Self::zero(ws, wt), |a, b| &a + &b)
    }

    /// Terms grouped by total weight (s-weight + t-weight).
    fn layers(&self) -> Vec<Self> {
        let top = (self.ws + self.wt) as usize;
        let mut out = vec![Self::zero(self.ws, self.wt); top + 1];
        for (k, v) in &self.terms {
            out[(k.s_weight() + k.t_weight()) as usize].add_term(k.clone(), v.clone());
        }
        out
    }

    fn from_usize(n: usize) -> C {
        C::from_usize(n).expect("small integer embeds in the scalar type")
    }

    /// `exp(a)` for `a` without constant term, built layer by layer from
    /// `w·E_w = Σ_k k·A_k·E_{w-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::domain("exp of a series with nonzero constant term"));
        }
        let a = self.layers();
        let top = a.len() - 1;
        let mut e: Vec<Self> = Vec::with_capacity(top + 1);
        e.push(Self::one(self.ws, self.wt));
        for w in 1..=top {
            let mut acc = Self::zero(self.ws, self.wt);
            for k in 1..=w {
                if a[k].is_empty() || e[w - k].is_empty() {
                    continue;
                }
                acc = &acc + &a[k].scale(&Self::from_usize(k)).multiply(&e[w - k]);
            }
            e.push(acc.scale(&(C::one() / Self::from_usize(w))));
        }
        let mut out = Self::zero(self.ws, self.wt);
        for layer in e {
            out = &out + &layer;
        }
        Ok(out)
    }

    /// `log(f)` for `f` with constant term 1, from
    /// `w·L_w = w·F_w − Σ_{k<w} k·L_k·F_{w-k}`.
    pub fn log(&self) -> Result<Self> {
        if !(self.constant_term() - C::one()).is_zero() {
            return Err(Error::domain(
                "log of a series whose constant term is not 1",
            ));
        }
        let f = self.layers();
        let top = f.len() - 1;
        let mut l: Vec<Self> = vec![Self::zero(self.ws, self.wt)];
        for w in 1..=top {
            let mut acc = f[w].scale(&Self::from_usize(w));
            for k in 1..w {
                if l[k].is_empty() || f[w - k].is_empty() {
                    continue;
                }
                acc = &acc - &l[k].scale(&Self::from_usize(k)).multiply(&f[w - k]);
            }
            l.push(acc.scale(&(C::one() / Self::from_usize(w))));
        }
        let mut out = Self::zero(self.ws, self.wt);
        for layer in l {
            out = &out + &layer;
        }
        Ok(out)
    }

    /// `((1 + x)/(1 − x))^exponent` for a single variable `x`, as
    /// `exp(exponent · (log(1+x) − log(1−x)))`.
    pub fn binomial_power(ws: u32, wt: u32, family: Family, var: Var, exponent: C) -> Self {
        let cap = match family {
            Family::S => ws,
            Family::T => wt,
        };
        let mut exponent_series = Self::zero(ws, wt);
        if var.index > 0 {
            // log(1+x) − log(1−x) = 2 Σ_{m odd} x^m / m
            let mut m = 1u32;
            while m * var.index <= cap {
                let c = exponent.clone() * Self::from_usize(2) / Self::from_usize(m as usize);
                exponent_series.add_term(MonomialKey::single(family, var, m), c);
                m += 2;
            }
        }
        exponent_series.exp().expect("no constant term")
    }

    /// Replaces every power `v^e` for which `rule(family, v, e)` is `Some(c)`
    /// by the scalar `c`; other variables are kept.
    pub fn substitute(&self, rule: impl Fn(Family, Var, u32) -> Option<C>) -> Self {
        let mut out = Self::zero(self.ws, self.wt);
        'terms: for (key, v) in &self.terms {
            let mut coeff = v.clone();
            let mut kept = [Vec::new(), Vec::new()];
            for (slot, (family, part)) in [(Family::S, &key.s), (Family::T, &key.t)]
                .into_iter()
                .enumerate()
            {
                for &(var, e) in part.iter() {
                    match rule(family, var, e) {
                        Some(c) => {
                            if c.is_zero() {
                                continue 'terms;
                            }
                            coeff = coeff * c;
                        }
                        None => kept[slot].push((var, e)),
                    }
                }
            }
            let [s, t] = kept;
            out.add_term(MonomialKey { s, t }, coeff);
        }
        out
    }

    /// Keys present in either series, ascending.
    pub fn support_union<'a>(&'a self, other: &'a Self) -> impl Iterator<Item = &'a MonomialKey> {
        let mut keys: Vec<&MonomialKey> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
    }
}

impl<C: Scalar> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn add(self, other: Self) -> TruncatedSeries<C> {
        self.check_same(other);
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<C: Scalar> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn sub(self, other: Self) -> TruncatedSeries<C> {
        self + &(-other)
    }
}

impl<C: Scalar> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries {
            ws: self.ws,
            wt: self.wt,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), -v.clone()))
                .collect(),
        }
    }
}

impl<C: Scalar> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, other: Self) -> TruncatedSeries<C> {
        self.multiply(other)
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if k.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "({v})*{k}")?;
            }
        }
        Ok(())
    }
}

struct Record<'a, C>(&'a MonomialKey, &'a C);

impl<C: fmt::Display> Serialize for Record<'_, C> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Term", 3)?;
        st.serialize_field("s", &ExpMap(&self.0.s))?;
        st.serialize_field("t", &ExpMap(&self.0.t))?;
        st.serialize_field("coeff", &self.1.to_string())?;
        st.end()
    }
}

impl<C: Scalar + fmt::Display> Serialize for TruncatedSeries<C> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(self.terms.len()))?;
        for (k, v) in &self.terms {
            seq.serialize_element(&Record(k, v))?;
        }
        seq.end()
    }
}
