use std::path::Path;
use std::sync::Arc;

use ihoe_core::gf::{extend, CoeffRepr, Embedding, Field, FieldCtx, FieldSpec};
use ihoe_core::hopf::{HopfRepr, HopfStructure};
use ihoe_core::ihoe2::{build_k, Ihoe2, Ihoe2Params, Ihoe2Repr, KParams};
use ihoe_core::orealg::{OrePresentation, OreRepr};
use ihoe_core::tensoralg::{TensorElement, TensorTermRepr};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT: u32 = 1;

/// A versioned input document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Document {
    pub format: u32,
    pub field: FieldSpec,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Body {
    Ihoe2 {
        #[serde(default)]
        d: Vec<(u32, CoeffRepr)>,
        #[serde(default)]
        b: Vec<(u32, CoeffRepr)>,
        #[serde(default)]
        c: Vec<(u32, u32, CoeffRepr)>,
    },
    Kfamily {
        a: i32,
        b: CoeffRepr,
        c: CoeffRepr,
    },
    Ore {
        presentation: OreRepr,
        /// Full Hopf data; without it the generators get `tails` (default zero).
        #[serde(default, skip_serializing_if = "Option::is_none")]
        hopf: Option<HopfRepr>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tails: Option<Vec<Vec<TensorTermRepr>>>,
    },
}

impl Document {
    pub fn read(path: &Path) -> Result<Document, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
        let doc: Document = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        if doc.format != FORMAT {
            return Err(CliError::Usage(format!(
                "{}: unsupported format {}",
                path.display(),
                doc.format
            )));
        }
        Ok(doc)
    }

    pub fn from_params(params: &Ihoe2Params) -> Document {
        let Ihoe2Repr { d, b, c, .. } = params.to_repr();
        Document {
            format: FORMAT,
            field: params.field().spec(),
            body: Body::Ihoe2 { d, b, c },
        }
    }

    pub fn from_hopf(hs: &HopfStructure) -> Document {
        Document {
            format: FORMAT,
            field: hs.field().spec(),
            body: Body::Ore {
                presentation: hs.base().to_repr(),
                hopf: Some(hs.to_repr()),
                tails: None,
            },
        }
    }

    /// The document's field, or its degree-`ext` extension.
    fn fields(&self, ext: u32) -> Result<(Field, Embedding), CliError> {
        let base = FieldCtx::from_spec(&self.field)?;
        if ext <= 1 {
            return Ok((base.clone(), Embedding::identity(&base)));
        }
        Ok(extend(&base, ext)?)
    }

    /// `H(d, b, c)` parameters over the working field.
    pub fn params(&self, ext: u32) -> Result<Ihoe2Params, CliError> {
        let Body::Ihoe2 { d, b, c } = &self.body else {
            return Err(CliError::Usage("this verb needs a document of kind ihoe2".into()));
        };
        let (_, e) = self.fields(ext)?;
        let repr = Ihoe2Repr {
            p: self.field.p,
            m: self.field.m,
            d: d.clone(),
            b: b.clone(),
            c: c.clone(),
        };
        Ok(Ihoe2Params::from_repr_in(e.source(), &repr)?.embed(&e))
    }

    pub fn load(&self, cap: Option<u32>, ext: u32) -> Result<Loaded, CliError> {
        match &self.body {
            Body::Ihoe2 { .. } => {
                let ihoe = Ihoe2::new(self.params(ext)?, cap)?;
                Ok(Loaded {
                    hopf: ihoe.hopf().clone(),
                    ihoe: Some(ihoe),
                })
            }
            Body::Kfamily { a, b, c } => {
                let (big, e) = self.fields(ext)?;
                let src = e.source();
                let params = KParams {
                    a: *a,
                    b: e.apply(src.parse_coeff(b)?),
                    c: e.apply(src.parse_coeff(c)?),
                };
                Ok(Loaded {
                    hopf: build_k(&big, &params, cap)?,
                    ihoe: None,
                })
            }
            Body::Ore {
                presentation,
                hopf,
                tails,
            } => {
                if ext > 1 {
                    return Err(CliError::Usage("--field-ext is not supported for kind ore".into()));
                }
                let (field, _) = self.fields(1)?;
                let mut base = OrePresentation::from_repr(field.clone(), presentation)?;
                if let Some(cap) = cap {
                    base = base.with_degree_cap(cap)?;
                }
                let n = base.n();
                let hs = match (hopf, tails) {
                    (Some(_), Some(_)) => {
                        return Err(CliError::Usage("give either hopf or tails, not both".into()))
                    }
                    (Some(h), None) => HopfStructure::from_repr(base, h)?,
                    (None, Some(t)) => {
                        let tails = t
                            .iter()
                            .map(|w| TensorElement::from_repr(&field, 2, n, w))
                            .collect::<Result<Vec<_>, _>>()?;
                        HopfStructure::from_tails(base, tails)?
                    }
                    (None, None) => HopfStructure::from_tails(base, vec![TensorElement::zero(2, n); n])?,
                };
                Ok(Loaded { hopf: hs, ihoe: None })
            }
        }
    }
}

pub struct Loaded {
    pub hopf: Arc<HopfStructure>,
    pub ihoe: Option<Ihoe2>,
}

impl Loaded {
    pub fn ihoe(&self) -> Result<&Ihoe2, CliError> {
        self.ihoe
            .as_ref()
            .ok_or_else(|| CliError::Usage("this verb needs a document of kind ihoe2".into()))
    }
}
