//! Loading semigroups, spaces and triangle families from the command line.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use pocs_core::fraisse::{FamilyConfig, TriangleFamily};
use pocs_core::semigroup::construct::parse_rational;
use pocs_core::semigroup::{path_semigroup, product_capped, sauer_semigroup, PosetSemigroup, SemigroupData};
use pocs_core::space::{LabelledGraph, MetricSpace, SpaceData};
use pocs_core::{Error, Result};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &str, text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("{path}: {e}")))
}

fn numbers(spec: &str, args: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|s| s.trim().parse().map_err(|_| Error::Input(format!("bad number {s:?} in {spec:?}"))))
        .collect()
}

/// `path:N`, `product:N,K`, `sauer:V1,V2,...` or a JSON file.
pub fn semigroup(spec: &str) -> Result<Arc<PosetSemigroup>> {
    let sg = match spec.split_once(':') {
        Some(("path", args)) => match numbers(spec, args)?[..] {
            [n] => path_semigroup(n)?,
            _ => return Err(Error::Input(format!("{spec:?}: expected path:N"))),
        },
        Some(("product", args)) => match numbers(spec, args)?[..] {
            [n, k] => product_capped(n, k)?,
            _ => return Err(Error::Input(format!("{spec:?}: expected product:N,K"))),
        },
        Some(("sauer", args)) => {
            let values = args.split(',').map(|v| parse_rational(v.trim())).collect::<Result<Vec<_>>>()?;
            sauer_semigroup(&values)?
        }
        _ if Path::new(spec).exists() => {
            let data: SemigroupData = parse_json(spec, &read(spec)?)?;
            PosetSemigroup::from_data(&data)?
        }
        _ => return Err(Error::Input(format!("{spec:?} is neither a built-in semigroup nor a file"))),
    };
    Ok(Arc::new(sg))
}

/// Raw semigroup data from a file, without validation.
pub fn semigroup_data(path: &str) -> Result<SemigroupData> {
    parse_json(path, &read(path)?)
}

/// A possibly partial distance graph; named semigroups are resolved with
/// [`semigroup`].
pub fn graph(path: &str) -> Result<LabelledGraph> {
    let data: SpaceData = parse_json(path, &read(path)?)?;
    data.to_graph(|name| semigroup(name).map(|s| (*s).clone()))
}

/// A complete space file. Missing entries are an error.
pub fn space(path: &str) -> Result<MetricSpace> {
    let g = graph(path)?;
    if !g.is_complete() {
        return Err(Error::Input(format!("{path}: distance matrix has undefined entries (use `complete`)")));
    }
    MetricSpace::from_graph(&g)
}

pub fn family(file: Option<&str>, k1: Option<u32>, delta: Option<u32>) -> Result<Option<TriangleFamily>> {
    match (file, k1, delta) {
        (Some(path), None, None) => {
            let cfg: FamilyConfig = parse_json(path, &read(path)?)?;
            TriangleFamily::from_config(&cfg).map(Some)
        }
        (None, Some(k1), Some(delta)) => Ok(Some(TriangleFamily::odd_perimeter(k1, delta))),
        (None, None, None) => Ok(None),
        _ => Err(Error::Input("give either --family FILE or both --k1 and --delta".into())),
    }
}

/// Comma-separated vertex labels.
pub fn vertices(s: &MetricSpace, list: &str) -> Result<Vec<usize>> {
    let labels: Vec<&str> = list.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
    s.vertices_by_label(&labels)
}
