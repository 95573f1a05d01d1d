use serde::Serialize;

use crate::ribbon::RibbonInvariants;

/// Closure of the stratum of all-ones index sequences of a given length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlbComponent {
    pub indices: Vec<i64>,
    pub dim: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VbComponent {
    Exists {
        dim: i64,
    },
    NotExists,
    /// Existence is open for `gbar >= 2`, `g > 4·gbar - 3`.
    Unknown,
}

/// Shape of the moduli space when no stable generalized line bundle exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialCase {
    Irreducible { dim: i64 },
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentTable {
    pub glb_components: Vec<GlbComponent>,
    pub vb_component: VbComponent,
    pub special_case: Option<SpecialCase>,
}

impl ComponentTable {
    pub fn is_empty(&self) -> bool {
        matches!(self.special_case, Some(SpecialCase::Empty))
    }

    /// Number of irreducible components, when known.
    pub fn component_count(&self) -> Option<usize> {
        match (self.special_case, self.vb_component) {
            (Some(SpecialCase::Empty), _) => Some(0),
            (Some(SpecialCase::Irreducible { .. }), _) => Some(1),
            (None, VbComponent::Exists { .. }) => Some(self.glb_components.len() + 1),
            (None, VbComponent::NotExists) => Some(self.glb_components.len()),
            (None, VbComponent::Unknown) => None,
        }
    }
}

/// Closed-form number of components whose general member is a generalized
/// line bundle; meaningful when `g > 2·gbar - 1`.
pub fn glb_component_count(ribbon: &RibbonInvariants, d: i64) -> i64 {
    let (g, gbar) = (ribbon.g(), ribbon.gbar());
    if d.rem_euclid(2) == 0 {
        (g + 2).div_euclid(2) - gbar
    } else {
        (g + 1).div_euclid(2) - gbar
    }
}

pub fn component_table(ribbon: &RibbonInvariants, d: i64) -> ComponentTable {
    let (g, gbar) = (ribbon.g(), ribbon.gbar());
    // Some index b in [0, g - 2·gbar] must match the parity of d. For odd d
    // this fails at g = 2·gbar as well as for g <= 2·gbar - 1.
    let has_stable_glb = ribbon.max_stable_index() >= d.rem_euclid(2);
    if has_stable_glb {
        let parity = d.rem_euclid(2);
        let glb_components = (1..=glb_component_count(ribbon, d))
            .map(|i| {
                let len = if parity == 0 { 2 * i - 2 } else { 2 * i - 1 };
                GlbComponent {
                    indices: vec![1; len as usize],
                    dim: g,
                }
            })
            .collect();
        let vb_component = if gbar <= 1 {
            VbComponent::NotExists
        } else if 4 * gbar - 3 >= g {
            VbComponent::Exists { dim: 4 * gbar - 3 }
        } else {
            VbComponent::Unknown
        };
        return ComponentTable {
            glb_components,
            vb_component,
            special_case: None,
        };
    }

    // Only pushed-forward rank-2 bundles (and Gr-equivalent sheaves) remain.
    let d_minus_g_even = (d - g).rem_euclid(2) == 0;
    let special = match gbar {
        0 if d_minus_g_even => SpecialCase::Empty,
        0 => SpecialCase::Irreducible { dim: 0 },
        1 if d_minus_g_even => SpecialCase::Irreducible { dim: 1 },
        1 => SpecialCase::Irreducible { dim: 2 },
        _ => SpecialCase::Irreducible { dim: 4 * gbar - 3 },
    };
    let vb_component = match special {
        SpecialCase::Irreducible { dim } => VbComponent::Exists { dim },
        SpecialCase::Empty => VbComponent::NotExists,
    };
    ComponentTable {
        glb_components: Vec::new(),
        vb_component,
        special_case: Some(special),
    }
}
