//! Serializable document forms of reports.
//!
//! Documents are plain data: partition parts become decimal strings (so
//! arbitrarily large parts survive JSON), the length filter becomes the
//! number or the string `"all"`, and every document carries
//! [`SCHEMA_VERSION`]. Witness lists inside a collision class are capped
//! at [`WITNESS_CAP`] entries while `preimage_count` keeps the true
//! total. Validation is separate from deserialization because cached
//! documents come from disk: a line that parses but lies about itself
//! (wrong version, inconsistent flags) is treated as corrupt by the
//! cache layer and recomputed.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::census::CensusRecord;
use crate::collision::{CollisionClass, InjectivityReport, LengthFilter};
use crate::family::CounterexamplePair;
use crate::partition::Partition;

/// Version stamp written into every document; readers reject mismatches.
pub const SCHEMA_VERSION: u32 = 1;

/// Most preimages a serialized collision class lists.
pub const WITNESS_CAP: usize = 16;

/// A document that parsed but cannot be trusted.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("schema version {found}, expected {expected}")]
    SchemaVersion { found: u32, expected: u32 },
    #[error("unparseable part value {0:?}")]
    BadPart(String),
    #[error("document contains a zero part")]
    ZeroPart,
    #[error("injective flag contradicts the class list")]
    InconsistentInjective,
    #[error("class claims {count} preimages but lists {listed}")]
    BadCount { count: u64, listed: usize },
}

pub fn partition_to_strings(partition: &Partition) -> Vec<String> {
    partition.parts().iter().map(|p| p.to_string()).collect()
}

pub fn partition_from_strings(parts: &[String]) -> Result<Partition, DocError> {
    let mut values = Vec::with_capacity(parts.len());
    for raw in parts {
        let value: BigUint = raw.parse().map_err(|_| DocError::BadPart(raw.clone()))?;
        values.push(value);
    }
    Partition::new(values).map_err(|_| DocError::ZeroPart)
}

impl Serialize for LengthFilter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            LengthFilter::All => serializer.serialize_str("all"),
            LengthFilter::Exactly(l) => serializer.serialize_u64(*l as u64),
        }
    }
}

impl<'de> Deserialize<'de> for LengthFilter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct FilterVisitor;

        impl<'de> Visitor<'de> for FilterVisitor {
            type Value = LengthFilter;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a positive integer or the string \"all\"")
            }

            fn visit_u64<E: de::Error>(self, value: u64) -> Result<LengthFilter, E> {
                if value == 0 {
                    return Err(E::custom("length filter must be at least 1"));
                }
                Ok(LengthFilter::Exactly(value as usize))
            }

            fn visit_i64<E: de::Error>(self, value: i64) -> Result<LengthFilter, E> {
                u64::try_from(value)
                    .map_err(|_| E::custom("length filter must be positive"))
                    .and_then(|v| self.visit_u64(v))
            }

            fn visit_str<E: de::Error>(self, value: &str) -> Result<LengthFilter, E> {
                if value == "all" {
                    Ok(LengthFilter::All)
                } else {
                    Err(E::custom("expected \"all\""))
                }
            }
        }

        deserializer.deserialize_any(FilterVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollisionClassDoc {
    pub image: Vec<String>,
    pub preimage_count: u64,
    pub preimages: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityReportDoc {
    pub schema_version: u32,
    pub n: u64,
    pub k: usize,
    pub length_filter: LengthFilter,
    pub partitions_examined: u64,
    pub degenerate_count: u64,
    pub injective: bool,
    pub classes: Vec<CollisionClassDoc>,
}

impl CollisionClassDoc {
    pub fn from_class(class: &CollisionClass) -> Self {
        CollisionClassDoc {
            image: partition_to_strings(&class.image),
            preimage_count: class.preimages.len() as u64,
            preimages: class
                .preimages
                .iter()
                .take(WITNESS_CAP)
                .map(partition_to_strings)
                .collect(),
        }
    }
}

impl InjectivityReportDoc {
    pub fn from_report(report: &InjectivityReport) -> Self {
        InjectivityReportDoc {
            schema_version: SCHEMA_VERSION,
            n: report.n,
            k: report.k,
            length_filter: report.length_filter,
            partitions_examined: report.partitions_examined,
            degenerate_count: report.degenerate_count,
            injective: report.injective(),
            classes: report
                .classes
                .iter()
                .map(CollisionClassDoc::from_class)
                .collect(),
        }
    }

    /// Integrity checks for documents read back from disk.
    pub fn validate(&self) -> Result<(), DocError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocError::SchemaVersion {
                found: self.schema_version,
                expected: SCHEMA_VERSION,
            });
        }
        if self.injective != self.classes.is_empty() {
            return Err(DocError::InconsistentInjective);
        }
        for class in &self.classes {
            if class.preimage_count < 2
                || class.preimages.len() < 2
                || class.preimage_count < class.preimages.len() as u64
            {
                return Err(DocError::BadCount {
                    count: class.preimage_count,
                    listed: class.preimages.len(),
                });
            }
            partition_from_strings(&class.image)?;
            for preimage in &class.preimages {
                partition_from_strings(preimage)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub preimage: Vec<String>,
    pub image: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecordDoc {
    pub schema_version: u32,
    pub n: u64,
    pub exact_count: u64,
    pub lower_bound: u64,
    pub images: Vec<Vec<String>>,
    pub divisor_witnesses: Vec<WitnessDoc>,
}

impl CensusRecordDoc {
    pub fn from_record(record: &CensusRecord) -> Self {
        CensusRecordDoc {
            schema_version: SCHEMA_VERSION,
            n: record.n,
            exact_count: record.exact_count,
            lower_bound: record.lower_bound,
            images: record.images.iter().map(partition_to_strings).collect(),
            divisor_witnesses: record
                .divisor_witnesses
                .iter()
                .map(|(preimage, image)| WitnessDoc {
                    preimage: partition_to_strings(preimage),
                    image: partition_to_strings(image),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyPairDoc {
    pub schema_version: u32,
    pub family: String,
    pub parameters: BTreeMap<String, u64>,
    pub first: Vec<String>,
    pub second: Vec<String>,
    pub weight: String,
    pub k: usize,
    pub shared_image: Vec<String>,
}

impl FamilyPairDoc {
    pub fn from_pair<'a, I>(family: &str, parameters: I, pair: &CounterexamplePair) -> Self
    where
        I: IntoIterator<Item = (&'a str, u64)>,
    {
        FamilyPairDoc {
            schema_version: SCHEMA_VERSION,
            family: family.to_string(),
            parameters: parameters
                .into_iter()
                .map(|(name, value)| (name.to_string(), value))
                .collect(),
            first: partition_to_strings(&pair.first),
            second: partition_to_strings(&pair.second),
            weight: pair.weight.to_string(),
            k: pair.k,
            shared_image: partition_to_strings(&pair.shared_image),
        }
    }
}
