//! Wire formats.
//!
//! Rationals travel as canonical strings (`"p/q"`, or `"p"` for integers,
//! sign on the numerator). Hyperplane indices are 1-based on the wire,
//! matching the usual convention for `[n] = {1, ..., n}`; the library API
//! is 0-based, and conversion happens exactly here.

use crate::arrangement::{CentralArrangement, Translate};
use crate::discriminantal::{flat_of, Census, DiscNormal};
use crate::error::{Error, Result};
use crate::lattice::VgOutcome;
use crate::linalg::{format_rational, parse_rational, Rational, Subspace};
use crate::nvg::{DependencyCertificate, NvgFinding, TSet};
use serde::{Deserialize, Serialize};

/// `{"k": ..., "normals": [["p/q", ...], ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub k: usize,
    pub normals: Vec<Vec<String>>,
}

/// `{"t": ["p/q", ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TranslateJson {
    pub t: Vec<String>,
}

/// Arrangement plus the named family, as emitted for catalog examples.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExampleJson {
    pub k: usize,
    pub normals: Vec<Vec<String>>,
    #[serde(rename = "T", skip_serializing_if = "Option::is_none")]
    pub t_set: Option<Vec<Vec<usize>>>,
}

/// `{"L": [...], "coeffs": ["p/q", ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiscNormalJson {
    #[serde(rename = "L")]
    pub l_set: Vec<usize>,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusAggregateJson {
    pub multiplicity: usize,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusFlatJson {
    pub normal_span: Vec<Vec<String>>,
    pub members: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusJson {
    pub aggregates: Vec<CensusAggregateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flats: Option<Vec<CensusFlatJson>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "T")]
    pub t_set: Vec<Vec<usize>>,
    pub l: usize,
    #[serde(rename = "S_l")]
    pub s_l: Vec<Vec<usize>>,
    pub s: usize,
    pub rank_base: usize,
    pub rank_full: usize,
    pub flat_rank: usize,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FindingJson {
    #[serde(rename = "T")]
    pub t_set: Vec<Vec<usize>>,
    pub multiplicity: usize,
    pub rank: usize,
    pub certificates: Vec<CertificateJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictJson {
    pub very_generic_upto: usize,
    pub defect_found: bool,
    pub witness: Option<Vec<Vec<usize>>>,
    pub rank: Option<usize>,
    pub multiplicity: Option<usize>,
}

fn rationals_out(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn rationals_in(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

/// Shifts a family of index sets to the 1-based wire convention.
pub fn family_out(members: &[Vec<usize>]) -> Vec<Vec<usize>> {
    members
        .iter()
        .map(|s| s.iter().map(|&i| i + 1).collect())
        .collect()
}

/// Shifts one 1-based index set into library indexing.
pub fn indices_in(set: &[usize]) -> Result<Vec<usize>> {
    set.iter()
        .map(|&i| {
            if i == 0 {
                Err(Error::pre("indices on the wire are 1-based".to_string()))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Shifts a 1-based family into library indexing.
pub fn family_in(members: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    members.iter().map(|s| indices_in(s)).collect()
}

pub fn arrangement_to_json(a: &CentralArrangement) -> ArrangementJson {
    ArrangementJson {
        k: a.k(),
        normals: a.normals().iter().map(|v| rationals_out(v)).collect(),
    }
}

pub fn arrangement_from_json(j: &ArrangementJson) -> Result<CentralArrangement> {
    let normals = j
        .normals
        .iter()
        .map(|v| rationals_in(v))
        .collect::<Result<Vec<_>>>()?;
    CentralArrangement::new(j.k, normals)
}

pub fn translate_to_json(t: &Translate) -> TranslateJson {
    TranslateJson {
        t: rationals_out(t.coords()),
    }
}

pub fn translate_from_json(j: &TranslateJson) -> Result<Translate> {
    Ok(Translate::new(rationals_in(&j.t)?))
}

pub fn example_to_json(a: &CentralArrangement, tset: Option<&TSet>) -> ExampleJson {
    ExampleJson {
        k: a.k(),
        normals: a.normals().iter().map(|v| rationals_out(v)).collect(),
        t_set: tset.map(|t| family_out(t.members())),
    }
}

pub fn disc_normal_to_json(d: &DiscNormal) -> DiscNormalJson {
    DiscNormalJson {
        l_set: d.support().iter().map(|&i| i + 1).collect(),
        coeffs: rationals_out(d.coeffs()),
    }
}

fn subspace_rows_out(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| rationals_out(v)).collect()
}

pub fn census_to_json(c: &Census, detail: bool) -> CensusJson {
    CensusJson {
        aggregates: c
            .aggregates()
            .into_iter()
            .map(|(multiplicity, count)| CensusAggregateJson { multiplicity, count })
            .collect(),
        flats: detail.then(|| {
            c.flats()
                .iter()
                .map(|f| CensusFlatJson {
                    normal_span: subspace_rows_out(f.normal_span()),
                    members: family_out(f.members()),
                })
                .collect()
        }),
    }
}

pub fn certificate_to_json(
    a: &CentralArrangement,
    cert: &DependencyCertificate,
) -> Result<CertificateJson> {
    let flat = flat_of(a, cert.tset().members())?;
    Ok(CertificateJson {
        t_set: family_out(cert.tset().members()),
        l: cert.l() + 1,
        s_l: family_out(cert.s_members()),
        s: cert.s(),
        rank_base: cert.rank_base(),
        rank_full: cert.rank_full(),
        flat_rank: flat.rank(),
        multiplicity: cert.tset().r(),
    })
}

pub fn finding_to_json(a: &CentralArrangement, finding: &NvgFinding) -> Result<FindingJson> {
    Ok(FindingJson {
        t_set: family_out(finding.tset.members()),
        multiplicity: finding.tset.r(),
        rank: finding.rank,
        certificates: finding
            .certificates
            .iter()
            .map(|c| certificate_to_json(a, c))
            .collect::<Result<_>>()?,
    })
}

pub fn verdict_to_json(outcome: &VgOutcome) -> VerdictJson {
    VerdictJson {
        very_generic_upto: outcome.r_max,
        defect_found: outcome.defect_found(),
        witness: outcome.defect.as_ref().map(|d| family_out(&d.members)),
        rank: outcome.defect.as_ref().map(|d| d.rank),
        multiplicity: outcome.defect.as_ref().map(|d| d.multiplicity),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn arrangement_roundtrip_is_identical() {
        let (a, _) = catalog::crapo();
        let j = arrangement_to_json(&a);
        let text = serde_json::to_string(&j).unwrap();
        let back: ArrangementJson = serde_json::from_str(&text).unwrap();
        assert_eq!(arrangement_from_json(&back).unwrap(), a);
    }

    #[test]
    fn arrangement_json_field_shape() {
        let (a, _) = catalog::crapo();
        let text = serde_json::to_string(&arrangement_to_json(&a)).unwrap();
        assert!(text.starts_with("{\"k\":2,\"normals\":"));
    }

    #[test]
    fn example_json_carries_one_based_family() {
        let (a, t) = catalog::crapo();
        let j = example_to_json(&a, Some(&t));
        assert_eq!(
            j.t_set.unwrap(),
            vec![vec![1, 2, 3], vec![1, 4, 5], vec![2, 4, 6], vec![3, 5, 6]]
        );
    }

    #[test]
    fn wire_indices_reject_zero() {
        assert!(indices_in(&[0, 1]).is_err());
        assert_eq!(indices_in(&[1, 4]).unwrap(), vec![0, 3]);
    }

    #[test]
    fn translate_roundtrip() {
        let t = Translate::new(vec![
            crate::linalg::rat(1, 2),
            crate::linalg::rint(-3),
            crate::linalg::rint(0),
        ]);
        let j = translate_to_json(&t);
        assert_eq!(j.t, vec!["1/2", "-3", "0"]);
        assert_eq!(translate_from_json(&j).unwrap(), t);
    }
}
