use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use frobgb::io::{parse_ring_file, AnyRing, IdealFile};
use frobgb::{Field, Ideal, Polynomial, RingExt, RingRef};

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn load_ring(path: &Path) -> Result<AnyRing> {
    let spec = parse_ring_file(&read(path)?)
        .with_context(|| format!("in ring file {}", path.display()))?;
    Ok(AnyRing::from_spec(spec)?)
}

pub fn load_ideal<F: Field>(ring: &RingRef<F>, path: &Path) -> Result<Ideal<F>> {
    let gens = IdealFile::parse(&read(path)?)
        .polynomials(ring)
        .with_context(|| format!("in ideal file {}", path.display()))?;
    Ok(Ideal::new(ring, gens)?)
}

pub fn parse_poly<F: Field>(ring: &RingRef<F>, text: &str) -> Result<Polynomial<F>> {
    ring.parse(text)
        .with_context(|| format!("in polynomial `{text}`"))
}

/// The argument of `--by`: an existing file is read as an ideal, anything
/// else is parsed as a polynomial.
pub enum By<F: Field> {
    Element(Polynomial<F>),
    Ideal(Ideal<F>),
}

pub fn parse_by<F: Field>(ring: &RingRef<F>, arg: &str) -> Result<By<F>> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(By::Ideal(load_ideal(ring, path)?))
    } else {
        Ok(By::Element(parse_poly(ring, arg)?))
    }
}

pub fn parse_list(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("bad integer `{s}`")))
        .collect()
}

pub fn parse_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((a, b)) = item.split_once(':') else {
            bail!("bad pair `{item}`, expected i:j");
        };
        let a = a
            .trim()
            .parse()
            .with_context(|| format!("bad pair `{item}`"))?;
        let b = b
            .trim()
            .parse()
            .with_context(|| format!("bad pair `{item}`"))?;
        out.push((a, b));
    }
    Ok(out)
}
