//! On-disk cache of rank tables.
//!
//! File layout (all integers little-endian):
//!
//! ```text
//! header  "URTB" | version u16 | family u8 | reserved u8 | order u64 | sha256(body) [32]
//! body    for n in 0..=order:
//!             n u64 | lo i64 | count u64 | count × (len u32 | signed LE bytes)
//! ```

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use crate::enumerate::{build_table_with_progress, Family, RankTable};
use crate::error::{Error, Result};
use crate::series::ZetaLaurent;

pub const MAGIC: &[u8; 4] = b"URTB";
pub const FORMAT_VERSION: u16 = 1;
const HEADER_LEN: usize = 4 + 2 + 1 + 1 + 8 + 32;

pub fn encode(table: &RankTable) -> Vec<u8> {
    let mut body = Vec::new();
    for (n, row) in table.rows().iter().enumerate() {
        body.extend_from_slice(&(n as u64).to_le_bytes());
        body.extend_from_slice(&row.lo().to_le_bytes());
        body.extend_from_slice(&(row.coeffs().len() as u64).to_le_bytes());
        for c in row.coeffs() {
            let bytes = c.to_signed_bytes_le();
            body.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
            body.extend_from_slice(&bytes);
        }
    }
    let mut out = Vec::with_capacity(HEADER_LEN + body.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.push(table.family().code());
    out.push(0);
    out.extend_from_slice(&(table.order() as u64).to_le_bytes());
    out.extend_from_slice(&Sha256::digest(&body));
    out.extend_from_slice(&body);
    out
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> std::result::Result<&'a [u8], String> {
        let end = self.pos.checked_add(len).filter(|&e| e <= self.buf.len());
        let end = end.ok_or_else(|| format!("truncated at byte {}", self.pos))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u64(&mut self) -> std::result::Result<u64, String> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }
}

fn decode_inner(bytes: &[u8]) -> std::result::Result<RankTable, String> {
    let mut r = Reader { buf: bytes, pos: 0 };
    if r.take(4)? != MAGIC {
        return Err("bad magic".into());
    }
    let version = u16::from_le_bytes(r.take(2)?.try_into().unwrap());
    if version != FORMAT_VERSION {
        return Err(format!("unsupported format version {version}"));
    }
    let code = r.take(1)?[0];
    let family = Family::from_code(code).ok_or_else(|| format!("unknown family code {code}"))?;
    r.take(1)?;
    let order = r.u64()?;
    let digest = r.take(32)?;
    if Sha256::digest(&bytes[HEADER_LEN..]).as_slice() != digest {
        return Err("checksum mismatch".into());
    }
    let mut rows = Vec::new();
    for expected in 0..=order {
        let n = r.u64()?;
        if n != expected {
            return Err(format!("row {expected} labelled {n}"));
        }
        let lo = i64::from_le_bytes(r.take(8)?.try_into().unwrap());
        let count = r.u64()?;
        let mut coeffs = Vec::new();
        for _ in 0..count {
            let len = u32::from_le_bytes(r.take(4)?.try_into().unwrap()) as usize;
            coeffs.push(BigInt::from_signed_bytes_le(r.take(len)?));
        }
        rows.push(ZetaLaurent::new(lo, coeffs));
    }
    if r.pos != bytes.len() {
        return Err(format!("{} trailing bytes", bytes.len() - r.pos));
    }
    Ok(RankTable::new(family, rows))
}

pub fn decode(bytes: &[u8], path: &Path) -> Result<RankTable> {
    decode_inner(bytes).map_err(|reason| Error::CorruptCache {
        path: path.to_path_buf(),
        reason,
    })
}

pub fn read_table(path: &Path) -> Result<RankTable> {
    decode(&fs::read(path)?, path)
}

/// Writes through a temporary file and renames, so readers never see a
/// partial table.
pub fn write_table(path: &Path, table: &RankTable) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&encode(table))?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// `family,n,m,value` rows, nonzero entries only.
pub fn write_csv(out: &mut impl std::io::Write, table: &RankTable) -> std::io::Result<()> {
    writeln!(out, "family,n,m,value")?;
    for (n, row) in table.rows().iter().enumerate() {
        for (m, c) in row.iter() {
            if c.sign() != num_bigint::Sign::NoSign {
                writeln!(out, "{},{n},{m},{c}", table.family())?;
            }
        }
    }
    Ok(())
}

/// Where a cache lookup came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheOutcome {
    Hit,
    /// A larger cached table was truncated.
    Truncated { cached_order: usize },
    Built,
    /// The cached file failed to decode and was replaced.
    Rebuilt,
}

/// A directory of `<family>.urtb` files, one table per family.
#[derive(Clone, Debug)]
pub struct TableStore {
    dir: PathBuf,
}

impl TableStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, family: Family) -> PathBuf {
        self.dir.join(format!("{family}.urtb"))
    }

    pub fn load_or_build(&self, family: Family, order: usize) -> Result<(RankTable, CacheOutcome)> {
        self.load_or_build_with_progress(family, order, |_| {})
    }

    /// Returns a table of exactly `order`. A cached table of at least that
    /// order is truncated; a smaller one is replaced by a fresh build. A
    /// corrupt file is reported through `log` and rebuilt.
    pub fn load_or_build_with_progress(
        &self,
        family: Family,
        order: usize,
        mut log: impl FnMut(&str),
    ) -> Result<(RankTable, CacheOutcome)> {
        let path = self.path_for(family);
        let mut corrupt = false;
        if path.exists() {
            match read_table(&path) {
                Ok(t) if t.family() == family && t.order() == order => return Ok((t, CacheOutcome::Hit)),
                Ok(t) if t.family() == family && t.order() > order => {
                    let cached_order = t.order();
                    return Ok((t.truncated(order)?, CacheOutcome::Truncated { cached_order }));
                }
                Ok(_) => {}
                Err(e @ Error::CorruptCache { .. }) => {
                    log(&format!("warning: {e}; rebuilding"));
                    corrupt = true;
                }
                Err(e) => return Err(e),
            }
        }
        let mut last_decile = 0;
        let table = build_table_with_progress(family, order, &mut |step, steps| {
            let decile = 10 * step / steps.max(1);
            if decile > last_decile {
                last_decile = decile;
                log(&format!("{family} order {order}: {}%", 10 * decile));
            }
        });
        write_table(&path, &table)?;
        Ok((table, if corrupt { CacheOutcome::Rebuilt } else { CacheOutcome::Built }))
    }
}
