//! Content-addressed on-disk cache of resultant matrices (`TRMX1` files).

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use sha2::{Digest, Sha256};

use super::matrix::{build_matrix_retrying, ResultantMatrix};
use crate::error::{Error, Result};
use crate::geometry::{Point, Support, SupportTuple};

const HEADER: &str = "TRMX1";
const BUILD_ATTEMPTS: u64 = 16;

fn fmt_point(p: &[i64]) -> String {
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn canonical(ebar: &SupportTuple, seed: u64) -> String {
    let mut s = format!("dim {}\nseed {}\n", ebar.dim(), seed);
    for sup in ebar.supports() {
        let pts: Vec<String> = sup.points().iter().map(|p| fmt_point(p)).collect();
        let _ = writeln!(s, "support {}", pts.join(";"));
    }
    s
}

/// Hex SHA-256 of the canonical serialization of `Ē` and the lifting seed.
/// Support order is part of the key.
pub fn cache_key(ebar: &SupportTuple, seed: u64) -> String {
    hex::encode(Sha256::digest(canonical(ebar, seed).as_bytes()))
}

fn serialize(m: &ResultantMatrix) -> String {
    let mut s = format!("{}\n{}", HEADER, canonical(&m.ebar, m.seed));
    let _ = writeln!(s, "size {}", m.size());
    for r in 0..m.size() {
        let (i, a) = m.content[r];
        let _ = writeln!(s, "row {} {} {} {}", fmt_point(&m.rows[r]), i, a, m.mixed[r] as u8);
    }
    for (r, row) in m.entries.iter().enumerate() {
        for &(c, i, b) in row {
            let _ = writeln!(s, "entry {} {} {} {}", r, c, i, b);
        }
    }
    s.push_str("end\n");
    s
}

fn parse_point(s: &str) -> Option<Point> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    s.split(',').map(|x| x.parse().ok()).collect()
}

fn deserialize(text: &str) -> Option<ResultantMatrix> {
    let mut lines = text.lines();
    if lines.next()? != HEADER {
        return None;
    }
    let dim: usize = lines.next()?.strip_prefix("dim ")?.parse().ok()?;
    let seed: u64 = lines.next()?.strip_prefix("seed ")?.parse().ok()?;
    let mut supports = Vec::new();
    let mut line = lines.next()?;
    while let Some(rest) = line.strip_prefix("support ") {
        let pts = rest.split(';').map(parse_point).collect::<Option<Vec<_>>>()?;
        supports.push(Support::new(dim, pts).ok()?);
        line = lines.next()?;
    }
    let ebar = SupportTuple::new(dim, supports).ok()?;
    let size: usize = line.strip_prefix("size ")?.parse().ok()?;
    let mut rows = Vec::with_capacity(size);
    let mut content = Vec::with_capacity(size);
    let mut mixed = Vec::with_capacity(size);
    for _ in 0..size {
        let f: Vec<&str> = lines.next()?.strip_prefix("row ")?.split(' ').collect();
        if f.len() != 4 {
            return None;
        }
        rows.push(parse_point(f[0])?);
        content.push((f[1].parse().ok()?, f[2].parse().ok()?));
        mixed.push(f[3] == "1");
    }
    let mut entries = vec![Vec::new(); size];
    for line in lines.by_ref() {
        if line == "end" {
            let m = ResultantMatrix { ebar, seed, rows, content, mixed, entries };
            return validate(&m).then_some(m);
        }
        let f: Vec<usize> = line
            .strip_prefix("entry ")?
            .split(' ')
            .map(|x| x.parse().ok())
            .collect::<Option<Vec<_>>>()?;
        if f.len() != 4 || f[0] >= size || f[1] >= size {
            return None;
        }
        entries[f[0]].push((f[1], f[2], f[3]));
    }
    None
}

fn validate(m: &ResultantMatrix) -> bool {
    let k = m.ebar.len();
    m.rows.iter().all(|p| p.len() == m.ebar.dim())
        && m.content.iter().all(|&(i, a)| i < k && a < m.ebar.get(i).len())
        && m.entries.iter().zip(&m.content).all(|(row, &(i, _))| {
            row.len() == m.ebar.get(i).len() && row.iter().all(|&(_, ri, b)| ri == i && b < m.ebar.get(i).len())
        })
}

fn path_for(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("{}.trmx", key))
}

/// Write `m` under its key; the file appears atomically.
pub fn cache_store(dir: &Path, m: &ResultantMatrix) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| Error::Io(e.to_string()))?;
    let key = cache_key(&m.ebar, m.seed);
    let path = path_for(dir, &key);
    let tmp = dir.join(format!(".{}.{}.tmp", key, std::process::id()));
    fs::write(&tmp, serialize(m)).map_err(|e| Error::Io(e.to_string()))?;
    fs::rename(&tmp, &path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(path)
}

/// Load the matrix stored for `(Ē, seed)`; missing or corrupt entries give
/// [`Error::CacheMiss`].
pub fn cache_load(dir: &Path, ebar: &SupportTuple, seed: u64) -> Result<ResultantMatrix> {
    let text = fs::read_to_string(path_for(dir, &cache_key(ebar, seed))).map_err(|_| Error::CacheMiss)?;
    let m = deserialize(&text).ok_or(Error::CacheMiss)?;
    if &m.ebar != ebar || m.seed != seed {
        return Err(Error::CacheMiss);
    }
    Ok(m)
}

/// In-memory memo in front of an optional cache directory.
#[derive(Debug, Default)]
pub struct MatrixCache {
    dir: Option<PathBuf>,
    memo: Mutex<HashMap<String, Arc<ResultantMatrix>>>,
}

impl MatrixCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        MatrixCache { dir, memo: Mutex::new(HashMap::new()) }
    }

    /// Cached matrix for `Ē`; builds (retrying degenerate liftings from
    /// `seed` upward) and stores on a miss.
    pub fn get(&self, ebar: &SupportTuple, seed: u64) -> Result<Arc<ResultantMatrix>> {
        let key = cache_key(ebar, seed);
        if let Some(m) = self.memo.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let loaded = self.dir.as_ref().and_then(|d| cache_load(d, ebar, seed).ok());
        let m = match loaded {
            Some(m) => m,
            None => {
                let m = build_matrix_retrying(ebar, seed, BUILD_ATTEMPTS)?;
                if let Some(d) = &self.dir {
                    // a failed store only costs a rebuild next time
                    let _ = store_as(d, &m, seed);
                }
                m
            }
        };
        let m = Arc::new(m);
        self.memo.lock().unwrap().insert(key, m.clone());
        Ok(m)
    }
}

/// Store `m` under the key of `(Ē, requested_seed)`. The stored seed is the
/// one the lookup used, since a retried build may have settled on a later one.
fn store_as(dir: &Path, m: &ResultantMatrix, requested_seed: u64) -> Result<()> {
    let alias = ResultantMatrix { seed: requested_seed, ..m.clone() };
    cache_store(dir, &alias).map(|_| ())
}
