//! Persistent store for restricted simple-character tables.
//!
//! The cache is a single human-readable JSON document holding one table per
//! (system, p) pair, each table mapping a restricted weight to its simple
//! character as sorted (a, b, multiplicity) triples. Decoding is total: any
//! byte input yields a value or an error, never a panic, and every numeric
//! field is bounded before it reaches weight arithmetic. A decoded table is
//! only trusted after [`crate::simples::ModularContext::with_restricted_table`]
//! revalidates its shape, so a corrupt or tampered file downgrades to a
//! rebuild instead of poisoning a sweep.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::characters::FormalCharacter;
use crate::rootdata::{RootSystem, Weight};
use crate::simples::{ModularContext, SimplesError};

pub const CACHE_VERSION: u32 = 1;

/// Characteristics beyond this are never cached; the bound keeps primality
/// and table-size checks cheap on untrusted input.
const MAX_CHARACTERISTIC: i64 = 10_000;

/// Weight coordinates beyond this bound are rejected before any ordering or
/// reflection arithmetic, which would otherwise overflow on absurd inputs.
const MAX_COORDINATE: i64 = 1 << 20;

/// Multiplicities are bounded so that accumulating duplicated triples stays
/// far from i64 overflow even for the largest decodable entry list.
const MAX_MULTIPLICITY: i64 = 1 << 40;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache file is not valid JSON: {0}")]
    Malformed(String),
    #[error("cache version {found} is not supported (expected {CACHE_VERSION})")]
    Version { found: u32 },
    #[error("unknown root system tag {0:?}")]
    UnknownSystem(String),
    #[error("characteristic {0} is outside the cacheable range")]
    UnsupportedCharacteristic(i64),
    #[error("cache table is not usable: {0}")]
    Invalid(String),
    #[error(transparent)]
    Rejected(#[from] SimplesError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub weight: [i64; 2],
    pub character: Vec<[i64; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheTable {
    pub system: String,
    pub p: i64,
    pub entries: Vec<CacheEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    pub tables: Vec<CacheTable>,
}

impl Default for CacheFile {
    fn default() -> CacheFile {
        CacheFile::new()
    }
}

impl CacheFile {
    pub fn new() -> CacheFile {
        CacheFile { version: CACHE_VERSION, tables: Vec::new() }
    }

    pub fn find(&self, system: RootSystem, p: i64) -> Option<&CacheTable> {
        self.tables.iter().find(|t| t.system == system.name() && t.p == p)
    }

    /// Inserts or replaces the table for the incoming (system, p) pair,
    /// keeping tables sorted so that repeated saves are byte-identical.
    pub fn upsert(&mut self, table: CacheTable) {
        self.tables.retain(|t| !(t.system == table.system && t.p == table.p));
        self.tables.push(table);
        self.tables.sort_by(|x, y| (&x.system, x.p).cmp(&(&y.system, y.p)));
    }
}

/// Decodes a cache document from raw bytes. Total: malformed input of any
/// kind is reported as an error.
pub fn from_json_bytes(bytes: &[u8]) -> Result<CacheFile, CacheError> {
    let file: CacheFile =
        serde_json::from_slice(bytes).map_err(|e| CacheError::Malformed(e.to_string()))?;
    if file.version != CACHE_VERSION {
        return Err(CacheError::Version { found: file.version });
    }
    Ok(file)
}

pub fn load(path: &Path) -> Result<CacheFile, CacheError> {
    from_json_bytes(&fs::read(path)?)
}

/// Writes the document next to its destination and renames it into place, so
/// readers observe either the previous or the new cache, never a torn one.
pub fn save(path: &Path, cache: &CacheFile) -> Result<(), CacheError> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    serde_json::to_writer_pretty(&mut tmp, cache)
        .map_err(|e| CacheError::Malformed(e.to_string()))?;
    tmp.persist(path).map_err(|e| CacheError::Io(e.error))?;
    Ok(())
}

/// Snapshot of a context's restricted character table, entries and triples
/// sorted for deterministic serialization.
pub fn table_from_context(ctx: &ModularContext) -> CacheTable {
    let entries = ctx
        .restricted_table()
        .map(|(w, ch)| {
            let mut character: Vec<[i64; 3]> = ch.iter().map(|(x, m)| [x.a, x.b, m]).collect();
            character.sort_unstable();
            CacheEntry { weight: [w.a, w.b], character }
        })
        .collect();
    CacheTable { system: ctx.datum().system().name().to_owned(), p: ctx.p(), entries }
}

fn parse_system(tag: &str) -> Result<RootSystem, CacheError> {
    match tag {
        "a2" => Ok(RootSystem::A2),
        "b2" => Ok(RootSystem::B2),
        other => Err(CacheError::UnknownSystem(other.to_owned())),
    }
}

fn check_coordinates(pair: &[i64]) -> Result<(), CacheError> {
    for &c in pair {
        // unsigned_abs: i64::MIN has no i64 absolute value.
        if c.unsigned_abs() > MAX_COORDINATE as u64 {
            return Err(CacheError::Invalid(format!("coordinate {c} is out of range")));
        }
    }
    Ok(())
}

/// Rebuilds a modular context from a decoded table, revalidating everything
/// the table claims. Numeric bounds are enforced before weights are compared
/// or reflected.
pub fn context_from_table(table: &CacheTable) -> Result<ModularContext, CacheError> {
    let system = parse_system(&table.system)?;
    if !(2..=MAX_CHARACTERISTIC).contains(&table.p) {
        return Err(CacheError::UnsupportedCharacteristic(table.p));
    }
    let mut map: BTreeMap<Weight, FormalCharacter> = BTreeMap::new();
    for entry in &table.entries {
        check_coordinates(&entry.weight)?;
        let key = Weight::new(entry.weight[0], entry.weight[1]);
        let mut ch = FormalCharacter::new();
        for triple in &entry.character {
            check_coordinates(&triple[..2])?;
            if triple[2].unsigned_abs() > MAX_MULTIPLICITY as u64 {
                return Err(CacheError::Invalid(format!(
                    "multiplicity {} is out of range",
                    triple[2]
                )));
            }
            ch.add_weight(Weight::new(triple[0], triple[1]), triple[2]);
        }
        if map.insert(key, ch).is_some() {
            return Err(CacheError::Invalid(format!("duplicate entry for weight {key}")));
        }
    }
    Ok(ModularContext::with_restricted_table(system, table.p, map)?)
}
