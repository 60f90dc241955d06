//! Resolution of lattice sources: dataset names, extracted neighbors and files.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use unimod::code::ZkCode;
use unimod::construction;
use unimod::glue;
use unimod::known::LONG_SHADOW_SOURCES;
use unimod::lattice::{EnumOptions, Lattice};

/// A lattice together with the name it was requested under.
pub struct Source {
    pub name: String,
    pub lattice: Lattice,
}

/// Prefix of the names given to the extracted long-shadow neighbors.
pub const NEIGHBOR_PREFIX: &str = "N36_";

/// `N36_i` for the `i`-th long-shadow source, counting from 1.
pub fn neighbor_name(index: usize) -> String {
    format!("{NEIGHBOR_PREFIX}{}", index + 1)
}

pub fn neighbor_index(name: &str) -> Option<usize> {
    let i: usize = name.strip_prefix(NEIGHBOR_PREFIX)?.parse().ok()?;
    (1..=LONG_SHADOW_SOURCES.len()).contains(&i).then(|| i - 1)
}

pub fn dataset_lattice(name: &str) -> Result<Lattice> {
    let code = construction::dataset(name)?;
    Ok(construction::construction_a(&code)?)
}

/// The long-shadow neighbor of a dataset lattice.
pub fn extract_neighbor(source: &str, opts: EnumOptions) -> Result<Lattice> {
    let l = dataset_lattice(source)?;
    match glue::long_shadow_extract(&l, opts)? {
        Some(n) => Ok(n),
        None => bail!("{source} has no neighbor of minimum norm 3 with a long shadow"),
    }
}

/// A code file (`k n r` header) goes through Construction A; a lattice file
/// (`m s` header) is read as is.
pub fn read_file(path: &Path) -> Result<Lattice> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let header = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    let lattice = match header.split_whitespace().count() {
        3 => construction::construction_a(&ZkCode::from_text(&text)?)?,
        2 => Lattice::from_text(&text)?,
        _ => {
            return Err(unimod::Error::Parse(format!(
                "{}: unrecognized header `{header}`",
                path.display()
            ))
            .into())
        }
    };
    Ok(lattice)
}

pub fn resolve(name: Option<&str>, file: Option<&PathBuf>, opts: EnumOptions) -> Result<Source> {
    match (name, file) {
        (Some(_), Some(_)) => bail!(unimod::Error::Invalid(
            "give either a name or --file, not both".into()
        )),
        (None, None) => bail!(unimod::Error::Invalid(
            "a dataset name or --file is required".into()
        )),
        (None, Some(path)) => Ok(Source {
            name: path.display().to_string(),
            lattice: read_file(path)?,
        }),
        (Some(name), None) => {
            let lattice = match neighbor_index(name) {
                Some(i) => extract_neighbor(LONG_SHADOW_SOURCES[i], opts)?,
                None => dataset_lattice(name)?,
            };
            Ok(Source {
                name: name.to_string(),
                lattice,
            })
        }
    }
}
