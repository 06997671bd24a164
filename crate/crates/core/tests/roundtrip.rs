use meandre::enumeration::{compositions_of, seaweeds_c};
use meandre::render::{from_json, to_json, GraphDocument};
use meandre::{Composition, SeaweedA, SeaweedC, Series};
use proptest::prelude::*;

fn all_documents(max_n: usize) -> Vec<GraphDocument> {
    let mut docs = Vec::new();
    for n in 1..=max_n {
        for q in seaweeds_c(n) {
            docs.push(GraphDocument::for_c(&q.with_series(Series::SoOdd)));
            docs.push(GraphDocument::for_c(&q));
        }
        for top in compositions_of(n) {
            for bottom in compositions_of(n) {
                docs.push(GraphDocument::for_a(&SeaweedA::new(top.clone(), bottom).unwrap()));
            }
        }
    }
    docs
}

#[test]
fn every_small_document_round_trips() {
    let docs = all_documents(5);
    assert_eq!(docs.len(), 2 * (4 + 16 + 64 + 256 + 1024) + (1 + 4 + 16 + 64 + 256));
    for doc in docs {
        let text = to_json(&doc);
        let back = from_json(&text).unwrap_or_else(|e| panic!("{}: {e}", doc.descriptor));
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), text);
    }
}

#[test]
fn tampered_documents_are_rejected() {
    let q = SeaweedC::sp(8, "3,4".parse().unwrap(), "5,3".parse().unwrap()).unwrap();
    let text = to_json(&GraphDocument::for_c(&q));
    let edits = [
        ("\"index\": 1", "\"index\": 2"),
        ("\"n\": 8", "\"n\": 9"),
        ("[1,3]", "[1,4]"),
        ("\"sigma_stable\":false", "\"sigma_stable\":true"),
        ("\"kind\":\"segment\"", "\"kind\":\"cycle\""),
        ("\"type\": \"C\"", "\"type\": \"D\""),
        ("\"index\": 1", "\"index\": 1,\n  \"extra\": 0"),
    ];
    for (from, to) in edits {
        assert!(text.contains(from), "{from}");
        let bad = text.replacen(from, to, 1);
        assert!(from_json(&bad).is_err(), "accepted edit {from} -> {to}");
    }
}

fn composition_within(n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=n.max(1), 0..=n).prop_map(move |raw| {
        let mut parts = Vec::new();
        let mut total = 0;
        for p in raw {
            if total + p <= n {
                total += p;
                parts.push(p);
            }
        }
        Composition::new(parts).unwrap()
    })
}

fn seaweed_c() -> impl Strategy<Value = SeaweedC> {
    (1usize..=12, any::<bool>()).prop_flat_map(|(n, odd)| {
        (composition_within(n), composition_within(n)).prop_map(move |(a, b)| {
            let series = if odd { Series::SoOdd } else { Series::Sp };
            SeaweedC::new(n, a, b, series).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn random_documents_round_trip(q in seaweed_c()) {
        let doc = GraphDocument::for_c(&q);
        let text = to_json(&doc);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(to_json(&back), text);
        prop_assert_eq!(back, doc);
    }

    #[test]
    fn graph_index_is_series_independent(q in seaweed_c()) {
        let b = GraphDocument::for_c(&q.with_series(Series::SoOdd));
        let c = GraphDocument::for_c(&q.with_series(Series::Sp));
        prop_assert_eq!(b.graph, c.graph);
        prop_assert_eq!(b.index, c.index);
    }
}
