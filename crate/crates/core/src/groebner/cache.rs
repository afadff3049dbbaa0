//! Content-addressed cache of reduced Gröbner bases.
//!
//! Keys are SHA-256 digests of (ring, order, generator multiset). A cache is
//! installed process-wide with [`install`]; with a directory attached, entries
//! are persisted one file per key as version-stamped JSON. Unreadable or
//! inconsistent files are ignored and recomputed.

use std::collections::HashMap;
use std::fs::{self, File};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use super::{digest_of, ReducedGB};
use crate::monomial::Monomial;
use crate::parse::render_poly;
use crate::poly::{Polynomial, Term};
use crate::ring::PolyRing;

pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Default)]
pub struct GbCache {
    memory: Mutex<HashMap<String, Vec<EncodedPoly>>>,
    dir: Option<PathBuf>,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

#[derive(Debug, Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: String,
    ring: String,
    order: String,
    digest: String,
    elements: Vec<EncodedPoly>,
}

/// Terms as `(coefficient "p/q", exponent vector)`; independent of variable names.
type EncodedPoly = Vec<(String, Vec<u32>)>;

fn encode(f: &Polynomial) -> EncodedPoly {
    f.terms()
        .iter()
        .map(|t| (format!("{}/{}", t.coeff.numer(), t.coeff.denom()), t.mono.exps().to_vec()))
        .collect()
}

fn decode(ring: &Arc<PolyRing>, e: &EncodedPoly) -> Option<Polynomial> {
    let field = ring.field();
    let mut terms = Vec::with_capacity(e.len());
    for (c, exps) in e {
        let (num, den) = c.split_once('/')?;
        let coeff = field.from_ratio(num.parse::<BigInt>().ok()?, den.parse::<BigInt>().ok()?).ok()?;
        if exps.len() != ring.nvars() {
            return None;
        }
        terms.push(Term {
            coeff,
            mono: Monomial::new(exps.clone()),
        });
    }
    Some(Polynomial::from_terms(ring, terms))
}

impl GbCache {
    pub fn in_memory() -> GbCache {
        GbCache::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> std::io::Result<GbCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(GbCache {
            dir: Some(dir),
            ..GbCache::default()
        })
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    fn get(&self, key: &str, ring: &Arc<PolyRing>) -> Option<ReducedGB> {
        let mem = self.memory.lock().expect("cache lock").get(key).cloned();
        let elements = match mem {
            Some(e) => e,
            None => {
                let path = self.path(key)?;
                let _guard = DirLock::shared(self.dir.as_deref()?);
                let entry = read_entry(&path)?;
                if entry.version != CACHE_VERSION
                    || entry.key != key
                    || entry.ring != ring.to_string()
                    || entry.order != ring.order().to_string()
                {
                    return None;
                }
                let polys: Option<Vec<Polynomial>> = entry.elements.iter().map(|e| decode(ring, e)).collect();
                if ReducedGB::from_elements(ring, polys?).digest() != entry.digest {
                    return None;
                }
                entry.elements
            }
        };
        let polys: Option<Vec<Polynomial>> = elements.iter().map(|e| decode(ring, e)).collect();
        let gb = ReducedGB::from_elements(ring, polys?);
        self.memory
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), elements);
        Some(gb)
    }

    fn put(&self, key: &str, gb: &ReducedGB) {
        let elements: Vec<EncodedPoly> = gb.elements().iter().map(encode).collect();
        if let Some(path) = self.path(key) {
            let entry = Entry {
                version: CACHE_VERSION,
                key: key.to_string(),
                ring: gb.ring().to_string(),
                order: gb.order().to_string(),
                digest: gb.digest().to_string(),
                elements: elements.clone(),
            };
            // best effort: a failed write only costs a recomputation later
            let _ = write_entry(self.dir.as_deref().expect("dir"), &path, &entry);
        }
        self.memory
            .lock()
            .expect("cache lock")
            .insert(key.to_string(), elements);
    }
}

fn read_entry(path: &Path) -> Option<Entry> {
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

fn write_entry(dir: &Path, path: &Path, entry: &Entry) -> std::io::Result<()> {
    let _guard = DirLock::exclusive(dir);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = File::create(&tmp)?;
        f.write_all(serde_json::to_string(entry)?.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Advisory lock on `<dir>/.lock`, released on drop.
struct DirLock(Option<File>);

impl DirLock {
    fn open(dir: &Path) -> Option<File> {
        File::options()
            .create(true)
            .truncate(false)
            .write(true)
            .open(dir.join(".lock"))
            .ok()
    }

    fn exclusive(dir: &Path) -> DirLock {
        DirLock(Self::open(dir).filter(|f| f.lock().is_ok()))
    }

    fn shared(dir: &Path) -> DirLock {
        DirLock(Self::open(dir).filter(|f| f.lock_shared().is_ok()))
    }
}

impl Drop for DirLock {
    fn drop(&mut self) {
        if let Some(f) = &self.0 {
            let _ = f.unlock();
        }
    }
}

static CURRENT: RwLock<Option<Arc<GbCache>>> = RwLock::new(None);

/// Installs `cache` for all subsequent basis computations in this process.
pub fn install(cache: Arc<GbCache>) {
    *CURRENT.write().expect("cache registry") = Some(cache);
}

pub fn uninstall() {
    *CURRENT.write().expect("cache registry") = None;
}

pub fn current() -> Option<Arc<GbCache>> {
    CURRENT.read().expect("cache registry").clone()
}

/// Digest of (ring, order, known basis, generator multiset).
pub fn key(ring: &PolyRing, known: &[Polynomial], gens: &[Polynomial]) -> String {
    let mut k: Vec<String> = known.iter().map(render_poly).collect();
    k.sort();
    let mut g: Vec<String> = gens.iter().filter(|p| !p.is_zero()).map(render_poly).collect();
    g.sort();
    let items = k
        .into_iter()
        .map(|s| format!("k:{s}"))
        .chain(g.into_iter().map(|s| format!("g:{s}")));
    digest_of(ring, std::iter::once(format!("v{CACHE_VERSION}")).chain(items))
}

pub(crate) fn lookup(key: &str, ring: &Arc<PolyRing>) -> Option<ReducedGB> {
    let cache = current()?;
    match cache.get(key, ring) {
        Some(gb) => {
            cache.hits.fetch_add(1, Ordering::Relaxed);
            Some(gb)
        }
        None => {
            cache.misses.fetch_add(1, Ordering::Relaxed);
            None
        }
    }
}

pub(crate) fn store(key: &str, gb: &ReducedGB) {
    if let Some(cache) = current() {
        cache.put(key, gb);
    }
}
