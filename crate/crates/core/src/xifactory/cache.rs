//! On-disk constant cache.
//!
//! Plain text, one record per line: `name index digits value`, with the
//! value written as a decimal string carrying every stored digit. Two
//! header lines precede the records:
//!
//! ```text
//! # likeiper-constants v1
//! # sha256 <hex digest of the record lines>
//! ```
//!
//! Files are replaced by writing a sibling temporary file and renaming it
//! over the target, so concurrent readers only ever see complete files.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::{internal_plan, ConstantCache};
use crate::error::{Error, Result};
use crate::mpseries::BigReal;

pub const CACHE_HEADER: &str = "# likeiper-constants v1";

/// Environment variable overriding the cache location.
pub const CACHE_ENV: &str = "LIKEIPER_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub index: u32,
    pub digits: u32,
    pub value: String,
}

impl Record {
    fn line(&self) -> String {
        format!("{} {} {} {}", self.name, self.index, self.digits, self.value)
    }

    fn parse(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::Cache(format!("malformed record {line:?}")));
        }
        let num = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::Cache(format!("malformed record {line:?}")))
        };
        Ok(Record {
            name: fields[0].to_string(),
            index: num(fields[1])?,
            digits: num(fields[2])?,
            value: fields[3].to_string(),
        })
    }
}

fn digest(lines: &[String]) -> String {
    let mut hasher = Sha256::new();
    for line in lines {
        hasher.update(line.as_bytes());
        hasher.update(b"\n");
    }
    hex::encode(hasher.finalize())
}

/// Reads and validates a cache file. A missing file yields no records; a
/// file written by another format version is ignored.
pub fn read_records(path: &Path) -> Result<Vec<Record>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut lines = text.lines();
    if lines.next() != Some(CACHE_HEADER) {
        return Ok(Vec::new());
    }
    let stored = lines
        .next()
        .and_then(|l| l.strip_prefix("# sha256 "))
        .ok_or_else(|| Error::Cache(format!("{} has no checksum line", path.display())))?
        .trim()
        .to_string();
    let body: Vec<String> = lines.filter(|l| !l.trim().is_empty()).map(str::to_string).collect();
    if digest(&body) != stored {
        return Err(Error::CacheChecksum { path: path.to_path_buf() });
    }
    body.iter().map(|l| Record::parse(l)).collect()
}

/// Atomically replaces the cache file with `records`.
pub fn write_records(path: &Path, records: &[Record]) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            fs::create_dir_all(dir)?;
        }
    }
    let lines: Vec<String> = records.iter().map(Record::line).collect();
    let tmp = temp_sibling(path);
    {
        let mut f = fs::File::create(&tmp)?;
        writeln!(f, "{CACHE_HEADER}")?;
        writeln!(f, "# sha256 {}", digest(&lines))?;
        for line in &lines {
            writeln!(f, "{line}")?;
        }
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

fn temp_sibling(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(format!(".tmp.{}", std::process::id()));
    path.with_file_name(name)
}

impl ConstantCache {
    pub fn to_records(&self) -> Vec<Record> {
        let d = self.digits;
        let rec = |name: &str, index: usize, v: &BigReal| Record {
            name: name.to_string(),
            index: index as u32,
            digits: d,
            value: v.to_exact_string(),
        };
        let mut out: Vec<Record> =
            self.stieltjes.iter().enumerate().map(|(n, g)| rec("stieltjes", n, g)).collect();
        out.extend(self.zeta_values.iter().enumerate().map(|(i, z)| rec("zeta", i + 2, z)));
        out.push(rec("zeta_prime", 2, &self.zeta_prime_2));
        out.push(rec("log_glaisher", 0, &self.log_a));
        out
    }

    /// Rebuilds a cache of exactly `digits` precision covering `order`,
    /// or `None` when the records do not contain it.
    pub fn from_records(records: &[Record], order: usize, digits: u32) -> Result<Option<Self>> {
        let mut table: BTreeMap<(&str, u32), &str> = BTreeMap::new();
        for r in records.iter().filter(|r| r.digits == digits) {
            table.insert((r.name.as_str(), r.index), r.value.as_str());
        }
        let get = |name: &str, index: u32| -> Result<Option<BigReal>> {
            table.get(&(name, index)).map(|v| BigReal::parse(v, digits)).transpose()
        };
        let mut stieltjes = Vec::with_capacity(order);
        for n in 0..order as u32 {
            match get("stieltjes", n)? {
                Some(v) => stieltjes.push(v),
                None => return Ok(None),
            }
        }
        let mut zeta_values = Vec::with_capacity(order);
        for k in 2..=order as u32 {
            match get("zeta", k)? {
                Some(v) => zeta_values.push(v),
                None => return Ok(None),
            }
        }
        let (Some(zeta_prime_2), Some(log_a)) = (get("zeta_prime", 2)?, get("log_glaisher", 0)?)
        else {
            return Ok(None);
        };
        Ok(Some(ConstantCache { digits, stieltjes, zeta_values, zeta_prime_2, log_a }))
    }
}

/// Loads the constants for an xi expansion of `order` at `digits` from
/// `path`, computing and persisting them when absent.
///
/// Freshly computed values pass through the same decimal text as cached
/// ones, so a cold and a warm run produce identical results.
pub fn load_or_compute(path: &Path, order: usize, digits: u32) -> Result<ConstantCache> {
    let (internal_order, internal_digits) = internal_plan(order, digits);
    let mut records = read_records(path)?;
    if let Some(cache) = ConstantCache::from_records(&records, internal_order, internal_digits)? {
        return Ok(cache);
    }
    let fresh = ConstantCache::compute(internal_order, internal_digits)?;
    let new_records = fresh.to_records();
    records.retain(|r| r.digits != internal_digits);
    records.extend(new_records.iter().cloned());
    write_records(path, &records)?;
    ConstantCache::from_records(&new_records, internal_order, internal_digits)?
        .ok_or_else(|| Error::Cache("freshly written records are incomplete".into()))
}
