use serde::{Deserialize, Serialize};

use crate::category::{Category, Violation};
use crate::error::{Error, Result};
use crate::model::{MemberKind, SourceFileModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MemberGroup {
    InnerTypes,
    StaticFields,
    StaticMethods,
    InstanceFields,
    Constructors,
    InstanceMethods,
}

impl MemberGroup {
    pub const ALL: [MemberGroup; 6] = [
        MemberGroup::InnerTypes,
        MemberGroup::StaticFields,
        MemberGroup::StaticMethods,
        MemberGroup::InstanceFields,
        MemberGroup::Constructors,
        MemberGroup::InstanceMethods,
    ];

    pub fn of(kind: MemberKind) -> MemberGroup {
        match kind {
            MemberKind::InnerType => MemberGroup::InnerTypes,
            MemberKind::StaticField => MemberGroup::StaticFields,
            MemberKind::StaticMethod => MemberGroup::StaticMethods,
            MemberKind::InstanceField => MemberGroup::InstanceFields,
            MemberKind::Constructor => MemberGroup::Constructors,
            MemberKind::InstanceMethod => MemberGroup::InstanceMethods,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct OrderingConfig {
    /// 1..=4 for the built-in conventions.
    pub id: Option<u8>,
    pub ranked_groups: [MemberGroup; 6],
}

impl Default for OrderingConfig {
    fn default() -> Self {
        OrderingConfig::builtin(2).expect("ordering 2 exists")
    }
}

impl OrderingConfig {
    pub fn builtin(id: u8) -> Option<OrderingConfig> {
        use MemberGroup::*;
        let ranked_groups = match id {
            1 => [
                InnerTypes,
                StaticFields,
                StaticMethods,
                InstanceFields,
                Constructors,
                InstanceMethods,
            ],
            2 => [
                StaticFields,
                StaticMethods,
                InstanceFields,
                Constructors,
                InstanceMethods,
                InnerTypes,
            ],
            3 => [
                StaticFields,
                StaticMethods,
                InstanceFields,
                InstanceMethods,
                Constructors,
                InnerTypes,
            ],
            4 => [
                InstanceFields,
                Constructors,
                InstanceMethods,
                StaticFields,
                StaticMethods,
                InnerTypes,
            ],
            _ => return None,
        };
        Some(OrderingConfig {
            id: Some(id),
            ranked_groups,
        })
    }

    /// A custom ranking; must mention every group exactly once.
    pub fn custom(ranked_groups: [MemberGroup; 6]) -> Result<OrderingConfig> {
        let complete = MemberGroup::ALL.iter().all(|g| ranked_groups.contains(g));
        if !complete {
            return Err(Error::Invalid(
                "ordering must rank each member group exactly once".into(),
            ));
        }
        Ok(OrderingConfig {
            id: None,
            ranked_groups,
        })
    }

    pub fn rank(&self, group: MemberGroup) -> usize {
        self.ranked_groups
            .iter()
            .position(|g| *g == group)
            .expect("ranking is a permutation")
    }
}

/// Positions (into `groups`) of members that appear after a member of a
/// later-ranked group.
pub fn out_of_order(groups: &[MemberGroup], cfg: &OrderingConfig) -> Vec<usize> {
    let mut max_rank = None;
    let mut out = Vec::new();
    for (i, g) in groups.iter().enumerate() {
        let r = cfg.rank(*g);
        match max_rank {
            Some(m) if r < m => out.push(i),
            Some(m) if r <= m => {}
            _ => max_rank = Some(r),
        }
    }
    out
}

pub fn check_ordering(model: &SourceFileModel, cfg: &OrderingConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    for ty in &model.types {
        let groups: Vec<MemberGroup> = ty.members.iter().map(|m| MemberGroup::of(m.kind)).collect();
        for i in out_of_order(&groups, cfg) {
            let m = &ty.members[i];
            out.push(
                Violation::new(
                    Category::Ordering,
                    &model.path,
                    m.line,
                    format!("{:?} member placed after a later group", groups[i]),
                )
                .with_detail(&m.name),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use MemberGroup::*;

    /// A member is misplaced iff some earlier member outranks it.
    fn pairwise_oracle(groups: &[MemberGroup], cfg: &OrderingConfig) -> Vec<usize> {
        (0..groups.len())
            .filter(|&i| (0..i).any(|j| cfg.rank(groups[j]) > cfg.rank(groups[i])))
            .collect()
    }

    #[test]
    fn builtin_layouts() {
        for id in 1..=4 {
            let cfg = OrderingConfig::builtin(id).unwrap();
            assert!(out_of_order(&cfg.ranked_groups, &cfg).is_empty());
            let others = (1..=4)
                .filter(|o| *o != id)
                .map(|o| OrderingConfig::builtin(o).unwrap());
            assert!(others
                .into_iter()
                .any(|o| !out_of_order(&cfg.ranked_groups, &o).is_empty()));
        }
        assert!(OrderingConfig::builtin(5).is_none());
        assert_eq!(OrderingConfig::default().id, Some(2));
    }

    #[test]
    fn rank_max_scan() {
        let cfg = OrderingConfig::builtin(2).unwrap();
        assert_eq!(
            out_of_order(&[StaticFields, InstanceFields, StaticFields], &cfg),
            vec![2]
        );
        assert!(out_of_order(&[], &cfg).is_empty());
    }

    #[test]
    fn custom_requires_permutation() {
        assert!(OrderingConfig::custom([StaticFields; 6]).is_err());
        assert!(OrderingConfig::custom(MemberGroup::ALL).is_ok());
    }

    fn group() -> impl Strategy<Value = MemberGroup> {
        prop::sample::select(MemberGroup::ALL.to_vec())
    }

    proptest! {
        #[test]
        fn matches_pairwise_oracle(groups in prop::collection::vec(group(), 0..=8), id in 1u8..=4) {
            let cfg = OrderingConfig::builtin(id).unwrap();
            prop_assert_eq!(out_of_order(&groups, &cfg), pairwise_oracle(&groups, &cfg));
        }

        #[test]
        fn inserting_a_member_never_removes_violations(
            groups in prop::collection::vec(group(), 0..=8),
            extra in group(),
            at in 0usize..=8,
            id in 1u8..=4,
        ) {
            let cfg = OrderingConfig::builtin(id).unwrap();
            let at = at.min(groups.len());
            let mut bigger = groups.clone();
            bigger.insert(at, extra);
            prop_assert!(out_of_order(&bigger, &cfg).len() >= out_of_order(&groups, &cfg).len());
        }

        #[test]
        fn sorted_layout_is_clean(mut groups in prop::collection::vec(group(), 0..=8), id in 1u8..=4) {
            let cfg = OrderingConfig::builtin(id).unwrap();
            groups.sort_by_key(|g| cfg.rank(*g));
            prop_assert!(out_of_order(&groups, &cfg).is_empty());
        }
    }
}
