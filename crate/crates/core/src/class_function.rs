//! Exact integer-valued class functions on `S_n` and `B_n`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{bipartitions, partitions, BiPartition, Partition, PartitionFilter};

/// Index set of the conjugacy classes of a family of groups.
pub trait ClassIndex: Clone + Ord + fmt::Display + Serialize + Send + Sync {
    /// Every class label of the group of size parameter `n`, canonically ordered.
    fn all(n: usize) -> Vec<Self>;

    /// Size parameter of the group this label belongs to.
    fn size(&self) -> usize;

    /// Order of the centralizer of an element of this class.
    fn centralizer_order(&self) -> BigInt;

    /// Class of the identity element.
    fn identity(n: usize) -> Self;
}

impl ClassIndex for Partition {
    fn all(n: usize) -> Vec<Self> {
        partitions(n, PartitionFilter::All)
    }

    fn size(&self) -> usize {
        self.n()
    }

    fn centralizer_order(&self) -> BigInt {
        Partition::centralizer_order(self)
    }

    fn identity(n: usize) -> Self {
        Partition::ones(n)
    }
}

impl ClassIndex for BiPartition {
    fn all(n: usize) -> Vec<Self> {
        bipartitions(n)
    }

    fn size(&self) -> usize {
        self.n()
    }

    fn centralizer_order(&self) -> BigInt {
        BiPartition::centralizer_order(self)
    }

    fn identity(n: usize) -> Self {
        BiPartition::new(Partition::ones(n), Partition::empty())
    }
}

/// A map from every conjugacy class of one group to an exact integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFn<K: ClassIndex> {
    n: usize,
    values: BTreeMap<K, BigInt>,
}

pub type ClassFunction = ClassFn<Partition>;
pub type BClassFunction = ClassFn<BiPartition>;

impl<K: ClassIndex> ClassFn<K> {
    pub fn zero(n: usize) -> Self {
        ClassFn {
            n,
            values: K::all(n).into_iter().map(|k| (k, BigInt::zero())).collect(),
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&K) -> BigInt) -> Self {
        ClassFn {
            n,
            values: K::all(n)
                .into_iter()
                .map(|k| {
                    let v = f(&k);
                    (k, v)
                })
                .collect(),
        }
    }

    /// Builds from an explicit table, which must cover exactly the classes of
    /// the group.
    pub fn from_values(n: usize, values: BTreeMap<K, BigInt>) -> Result<Self> {
        let keys: Vec<K> = values.keys().cloned().collect();
        if keys != K::all(n) {
            return Err(Error::domain(format!(
                "class function table does not cover exactly the classes of size {n}"
            )));
        }
        Ok(ClassFn { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Value on a class; panics if the label belongs to another group.
    pub fn get(&self, class: &K) -> &BigInt {
        self.values
            .get(class)
            .unwrap_or_else(|| panic!("{class} is not a class of the group of size {}", self.n))
    }

    pub fn set(&mut self, class: &K, value: BigInt) {
        let slot = self
            .values
            .get_mut(class)
            .unwrap_or_else(|| panic!("{class} is not a class of the group of size {}", self.n));
        *slot = value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.values.iter()
    }

    pub fn values(&self) -> &BTreeMap<K, BigInt> {
        &self.values
    }

    /// Value at the identity class: the degree for a character.
    pub fn dimension(&self) -> &BigInt {
        self.get(&K::identity(self.n))
    }

    pub fn map(&self, mut f: impl FnMut(&K, &BigInt) -> BigInt) -> Self {
        ClassFn {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), f(k, v)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.map(|_, v| v * c)
    }

    /// Classes where `self` and `other` differ, with both values.
    pub fn differences<'a>(&'a self, other: &'a Self) -> Vec<(K, BigInt, BigInt)> {
        assert_eq!(self.n, other.n, "class functions of different groups");
        self.values
            .iter()
            .filter_map(|(k, v)| {
                let w = other.get(k);
                (v != w).then(|| (k.clone(), v.clone(), w.clone()))
            })
            .collect()
    }

    /// `Σ_g f(g) t^{c(g)} / |G|` coefficient data: value divided by the
    /// centralizer order, per class.
    pub fn weighted_by_centralizer(&self) -> impl Iterator<Item = (&K, num_rational::BigRational)> {
        self.values.iter().map(|(k, v)| {
            (
                k,
                num_rational::BigRational::new(v.clone(), k.centralizer_order()),
            )
        })
    }
}

impl ClassFunction {
    /// `sign ⊗ χ`.
    pub fn tensor_sign(&self) -> Self {
        self.map(|nu, v| v * nu.sign())
    }
}

impl<K: ClassIndex> Add for &ClassFn<K> {
    type Output = ClassFn<K>;

    fn add(self, rhs: Self) -> ClassFn<K> {
        assert_eq!(self.n, rhs.n, "class functions of different groups");
        self.map(|k, v| v + rhs.get(k))
    }
}

impl<K: ClassIndex> Sub for &ClassFn<K> {
    type Output = ClassFn<K>;

    fn sub(self, rhs: Self) -> ClassFn<K> {
        assert_eq!(self.n, rhs.n, "class functions of different groups");
        self.map(|k, v| v - rhs.get(k))
    }
}

/// Sum of class functions on one group; `n` is needed for the empty sum.
pub fn sum<'a, K: ClassIndex + 'a>(
    n: usize,
    items: impl IntoIterator<Item = &'a ClassFn<K>>,
) -> ClassFn<K> {
    items.into_iter().fold(ClassFn::zero(n), |acc, f| &acc + f)
}

#[derive(Serialize)]
struct Entry<'a, K> {
    nu: &'a K,
    value: String,
}

/// `{"n":4,"values":[{"nu":[4],"value":"-1"},…]}`, values as decimal strings.
impl<K: ClassIndex> Serialize for ClassFn<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ClassFunction", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("values", &self.entries())?;
        st.end()
    }
}

impl<K: ClassIndex> ClassFn<K> {
    fn entries(&self) -> Vec<Entry<'_, K>> {
        self.values
            .iter()
            .map(|(nu, v)| Entry {
                nu,
                value: v.to_string(),
            })
            .collect()
    }

    /// Entries in the JSON shape used by character tables.
    pub fn json_values(&self) -> serde_json::Value {
        serde_json::to_value(self.entries()).expect("class function entries serialize")
    }
}

impl<K: ClassIndex> fmt::Display for ClassFn<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .values
            .iter()
            .map(|(k, v)| format!("{k}:{v}"))
            .collect();
        write!(f, "[{}]", cells.join(", "))
    }
}
