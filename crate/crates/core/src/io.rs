//! JSON file forms for based spaces, sparse maps, Hopf algebras and finite
//! groups.
//!
//! A map is a list of `[cod_multi_index, dom_multi_index, scalar]` records;
//! a Hopf algebra file names its field, its tensor factors and the five
//! structure maps. Reading validates shapes and primality but not axioms,
//! so a corrupted file loads and then fails `check_hopf` with a witness.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf_core::{AlgebraData, CoalgebraData, HopfData};
use crate::linalg::{concat, BasedSpace, LinearMap, Shape};
use crate::models::FiniteGroup;
use crate::scalars::{make_prime_field, PrimeField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldFile {
    pub p: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceFile {
    pub name: String,
    pub dim: usize,
    pub basis_labels: Vec<String>,
}

pub type MapRecord = (Vec<usize>, Vec<usize>, u32);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfFile {
    pub name: String,
    pub field: FieldFile,
    /// Tensor factors of the underlying space, most significant first.
    pub space: Vec<SpaceFile>,
    pub mult: Vec<MapRecord>,
    pub unit: Vec<MapRecord>,
    pub comult: Vec<MapRecord>,
    pub counit: Vec<MapRecord>,
    pub antipode: Vec<MapRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

pub fn space_to_file(s: &BasedSpace) -> SpaceFile {
    SpaceFile { name: s.name().to_string(), dim: s.dim(), basis_labels: s.labels().to_vec() }
}

pub fn space_from_file(s: &SpaceFile) -> Result<BasedSpace> {
    if s.basis_labels.len() != s.dim {
        return Err(Error::Parse(format!("space {} has dim {} but {} labels", s.name, s.dim, s.basis_labels.len())));
    }
    BasedSpace::new(s.name.clone(), s.basis_labels.clone())
}

pub fn map_to_records(m: &LinearMap) -> Vec<MapRecord> {
    m.entries().into_iter().map(|(c, d, v)| (c, d, v.value())).collect()
}

pub fn map_from_records(field: PrimeField, dom: Shape, cod: Shape, records: &[MapRecord]) -> Result<LinearMap> {
    let entries: Vec<_> = records.iter().map(|(c, d, v)| (c.clone(), d.clone(), Scalar(*v))).collect();
    LinearMap::from_entries(field, dom, cod, &entries)
}

pub fn hopf_to_file(h: &HopfData) -> HopfFile {
    HopfFile {
        name: h.name.clone(),
        field: FieldFile { p: h.field().p() as u64 },
        space: h.shape().iter().map(space_to_file).collect(),
        mult: map_to_records(h.mult()),
        unit: map_to_records(h.unit()),
        comult: map_to_records(h.comult()),
        counit: map_to_records(h.counit()),
        antipode: map_to_records(h.antipode()),
    }
}

pub fn hopf_from_file(file: &HopfFile) -> Result<HopfData> {
    let field = make_prime_field(file.field.p)?;
    let shape: Shape = file.space.iter().map(space_from_file).collect::<Result<_>>()?;
    let sq = concat(&shape, &shape);
    let map = |dom: &Shape, cod: &Shape, r: &[MapRecord]| map_from_records(field, dom.clone(), cod.clone(), r);
    let algebra =
        AlgebraData::new(shape.clone(), map(&sq, &shape, &file.mult)?, map(&Vec::new(), &shape, &file.unit)?)?;
    let coalgebra =
        CoalgebraData::new(shape.clone(), map(&shape, &sq, &file.comult)?, map(&shape, &Vec::new(), &file.counit)?)?;
    HopfData::new(file.name.clone(), algebra, coalgebra, map(&shape, &shape, &file.antipode)?)
}

pub fn group_to_file(g: &FiniteGroup) -> GroupFile {
    GroupFile { elements: g.labels().to_vec(), table: g.table().to_vec() }
}

pub fn group_from_file(name: &str, file: &GroupFile) -> Result<FiniteGroup> {
    FiniteGroup::from_table(name, file.elements.clone(), file.table.clone())
}

pub fn read_hopf(path: &Path) -> Result<HopfData> {
    let text = std::fs::read_to_string(path)?;
    let file: HopfFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    hopf_from_file(&file)
}

pub fn write_hopf(path: &Path, h: &HopfData) -> Result<()> {
    std::fs::write(path, to_json_string(&hopf_to_file(h))?)?;
    Ok(())
}

/// Pretty JSON with a trailing newline; key order follows the struct, so
/// output is byte-stable.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf_core::check_hopf;
    use crate::models::taft_algebra;

    #[test]
    fn hopf_round_trip() {
        let f = make_prime_field(5).unwrap();
        let h = taft_algebra(2, f).unwrap();
        let file = hopf_to_file(&h);
        let text = to_json_string(&file).unwrap();
        let back: HopfFile = serde_json::from_str(&text).unwrap();
        assert_eq!(hopf_from_file(&back).unwrap(), h);
    }

    #[test]
    fn corrupted_file_loads_and_fails_axioms() {
        let f = make_prime_field(5).unwrap();
        let mut file = hopf_to_file(&taft_algebra(2, f).unwrap());
        file.antipode.retain(|r| r.1 != vec![0]);
        let h = hopf_from_file(&file).unwrap();
        let r = check_hopf(&h, false);
        assert!(!r.passed());
        assert!(r.failures().iter().all(|i| i.witness.is_some()));
    }

    #[test]
    fn bad_inputs() {
        let f = make_prime_field(5).unwrap();
        let mut file = hopf_to_file(&taft_algebra(2, f).unwrap());
        file.field.p = 6;
        assert!(matches!(hopf_from_file(&file), Err(Error::NotPrime(6))));
        let mut file = hopf_to_file(&taft_algebra(2, f).unwrap());
        file.mult.push((vec![9], vec![0, 0], 1));
        assert!(hopf_from_file(&file).is_err());
        let g = FiniteGroup::s3();
        assert_eq!(group_from_file("S3", &group_to_file(&g)).unwrap().table(), g.table());
    }
}
