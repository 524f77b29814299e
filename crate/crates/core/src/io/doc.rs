use serde::{Deserialize, Serialize};

use super::{parse_form, parse_poly, render};
use crate::error::Result;
use crate::groebner::{Ideal, Ring};
use crate::newton::FormSet;
use crate::poly::Polynomial;

/// `{"nvars": n + 1, "forms": [...]}`
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FormSetDoc {
    pub nvars: usize,
    pub forms: Vec<String>,
}

impl FormSetDoc {
    pub fn from_form_set(g: &FormSet) -> Self {
        FormSetDoc {
            nvars: g.nvars(),
            forms: g.forms().iter().map(|f| render(f, g.nvars())).collect(),
        }
    }

    pub fn to_form_set(&self) -> Result<FormSet> {
        let forms = self
            .forms
            .iter()
            .map(|f| parse_form(f, self.nvars))
            .collect::<Result<Vec<_>, _>>()?;
        FormSet::new(forms)
    }

    /// The forms without the form-set validation.
    pub fn to_polys(&self) -> Result<Vec<Polynomial>> {
        Ok(self
            .forms
            .iter()
            .map(|f| parse_poly(f, self.nvars, 0))
            .collect::<Result<Vec<_>, _>>()?)
    }
}

/// `{"xvars": nx, "yvars": ny, "gens": [...]}`
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdealDoc {
    pub xvars: usize,
    #[serde(default)]
    pub yvars: usize,
    pub gens: Vec<String>,
}

impl IdealDoc {
    pub fn from_ideal(i: &Ideal) -> Self {
        let r = i.ring();
        IdealDoc {
            xvars: r.nx,
            yvars: r.ny,
            gens: i.gens().iter().map(|g| render(g, r.nx)).collect(),
        }
    }

    pub fn ring(&self) -> Ring {
        Ring::bigraded(self.xvars, self.yvars)
    }

    pub fn to_ideal(&self) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| parse_poly(g, self.xvars, self.yvars))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(self.ring(), gens)
    }
}

/// `{"nvars": n + 1, "support": [...], "q": "...", "f": "..."}`; the support
/// forms live in `x0..x{n-1}` and are parsed in the full ring.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JonquieresDoc {
    pub nvars: usize,
    pub support: Vec<String>,
    pub q: String,
    pub f: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_set_round_trip() {
        let doc: FormSetDoc =
            serde_json::from_str(r#"{"nvars": 3, "forms": ["x1*x2", "x0*x2", "x0*x1"]}"#).unwrap();
        let g = doc.to_form_set().unwrap();
        assert_eq!(FormSetDoc::from_form_set(&g), doc);
        assert_eq!(
            serde_json::to_string(&doc).unwrap(),
            r#"{"nvars":3,"forms":["x1*x2","x0*x2","x0*x1"]}"#
        );
    }

    #[test]
    fn ideal_round_trip() {
        let doc = IdealDoc {
            xvars: 2,
            yvars: 2,
            gens: vec!["-x0*y1 + x1*y0".into()],
        };
        assert_eq!(IdealDoc::from_ideal(&doc.to_ideal().unwrap()), doc);
    }
}
