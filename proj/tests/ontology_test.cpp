#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ctxsim/errors.hpp"
#include "ctxsim/ontology.hpp"
#include "fixtures.hpp"

using namespace ctxsim;
using ctxsim::testing::alessi;
using ctxsim::testing::random_world;

namespace {

std::vector<std::string> names(const EffectiveSlots& s) {
  std::vector<std::string> out;
  for (const auto& a : s.attributes) out.push_back(a.name);
  for (const auto& r : s.relations) out.push_back(r.name);
  return out;
}

std::vector<Diagnostic> diagnostics_of(std::string_view doc) {
  try {
    load_ontology(doc);
  } catch (const ValidationError& e) {
    return e.diagnostics();
  }
  return {};
}

bool mentions(const std::vector<Diagnostic>& ds, std::string_view subject,
              std::string_view fragment) {
  return std::ranges::any_of(ds, [&](const Diagnostic& d) {
    return d.subject == subject && d.message.find(fragment) != std::string::npos;
  });
}

const char* kChain = R"({
  "classes": [
    {"name": "A", "attributes": [{"name": "x", "kind": "number"}, {"name": "y", "kind": "text"}]},
    {"name": "B", "parent": "A", "relations": [{"name": "r", "target": "A", "card": "many"}]},
    {"name": "C", "parent": "B"},
    {"name": "D", "parent": "A"},
    {"name": "Z"}
  ],
  "instances": []
})";

}  // namespace

TEST(Ontology, MinimalDocument) {
  const Ontology o = load_ontology(
      R"({"classes": [{"name": "Object", "attributes": [{"name": "weightInKilos", "kind": "number"}]}],
          "instances": []})");
  EXPECT_EQ(o.classes().size(), 1u);
  EXPECT_EQ(o.instances().size(), 0u);
}

TEST(Ontology, AlessiBundleCounts) {
  const Ontology& o = *alessi().ontology;
  std::size_t objects = 0;
  for (const auto& i : o.instances()) objects += i.class_name == "Object" ? 1 : 0;
  EXPECT_EQ(objects, 9u);
  for (const char* c : {"Object", "Task", "FunctionalPart", "Functionality", "ShapeInfo"}) {
    EXPECT_NE(o.find_class(c), nullptr) << c;
  }
}

TEST(Ontology, CycleIsRejected) {
  const auto ds = diagnostics_of(R"({"classes": [{"name": "A", "parent": "B"},
                                                 {"name": "B", "parent": "A"}]})");
  EXPECT_TRUE(mentions(ds, "class A", "cycle") || mentions(ds, "class B", "cycle"));
}

TEST(Ontology, EffectiveSlotsOfRootAndSubclass) {
  const Ontology o = load_ontology(kChain);
  EXPECT_EQ(names(o.effective_slots("A")), (std::vector<std::string>{"x", "y"}));
  const auto& b = o.effective_slots("B");
  EXPECT_EQ(b.attributes.size(), 2u);
  EXPECT_EQ(b.relations.size(), 1u);
}

TEST(Ontology, EffectiveSlotsOfAlessiObject) {
  const auto& s = alessi().ontology->effective_slots("Object");
  EXPECT_EQ(names(s), (std::vector<std::string>{"weightInKilos", "hasPicture",
                                                "mightContainSolid", "liquidCapacityInLiters",
                                                "hasCharacterizingTask", "hasPart",
                                                "hasShapeInfo"}));
}

TEST(Ontology, Depth) {
  const Ontology o = load_ontology(kChain);
  EXPECT_EQ(o.class_depth("A"), 0u);
  EXPECT_EQ(o.class_depth("B"), 1u);
  EXPECT_EQ(o.class_depth("C"), 2u);
  EXPECT_THROW(o.class_depth("Nope"), UnknownEntityError);
}

TEST(Ontology, LowestCommonAncestor) {
  const Ontology o = load_ontology(kChain);
  EXPECT_EQ(o.lowest_common_ancestor("C", "C"), "C");
  EXPECT_EQ(o.lowest_common_ancestor("B", "D"), "A");
  EXPECT_EQ(o.lowest_common_ancestor("C", "D"), "A");
  EXPECT_EQ(o.lowest_common_ancestor("C", "B"), "B");
  EXPECT_EQ(o.lowest_common_ancestor("C", "Z"), std::nullopt);
}

TEST(Ontology, ConformsTo) {
  const Ontology o = load_ontology(kChain);
  EXPECT_TRUE(o.conforms_to("C", "A"));
  EXPECT_TRUE(o.conforms_to("C", "C"));
  EXPECT_FALSE(o.conforms_to("A", "C"));
  EXPECT_FALSE(o.conforms_to("D", "B"));
}

TEST(Ontology, ParseErrorCarriesPosition) {
  try {
    load_ontology("{\n  \"classes\": [\n    {\"name\": }\n]}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(Ontology, ShapeErrorCarriesPointer) {
  try {
    load_ontology(R"({"classes": [{"name": "A", "attributes": [{"name": "x", "kind": "color"}]}]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.location(), "/classes/0/attributes/0/kind");
  }
}

TEST(Ontology, UnknownKeysRejected) {
  EXPECT_THROW(load_ontology(R"({"classes": [], "extra": 1})"), ParseError);
}

TEST(Ontology, DanglingRelationTarget) {
  const auto ds = diagnostics_of(R"({
    "classes": [{"name": "A", "relations": [{"name": "r", "target": "A", "card": "many"}]}],
    "instances": [{"id": "a1", "class": "A", "rels": {"r": ["ghost"]}}]})");
  EXPECT_TRUE(mentions(ds, "instance a1, slot r", "ghost"));
}

TEST(Ontology, NonConformingRelationTarget) {
  const auto ds = diagnostics_of(R"({
    "classes": [{"name": "A", "relations": [{"name": "r", "target": "B", "card": "many"}]},
                {"name": "B"}],
    "instances": [{"id": "a1", "class": "A", "rels": {"r": ["a2"]}},
                  {"id": "a2", "class": "A"}]})");
  EXPECT_TRUE(mentions(ds, "instance a1, slot r", "expected B"));
}

TEST(Ontology, ValueChecks) {
  const auto ds = diagnostics_of(R"({
    "classes": [{"name": "A", "attributes": [{"name": "n", "kind": "number"},
                                             {"name": "s", "kind": "text", "card": "many"}]}],
    "instances": [{"id": "a1", "class": "A", "attrs": {"n": "heavy", "s": ["x", "x"], "q": 1}},
                  {"id": "a1", "class": "A"}]})");
  EXPECT_TRUE(mentions(ds, "instance a1, slot n", ""));
  EXPECT_TRUE(mentions(ds, "instance a1, slot s", "duplicate"));
  EXPECT_TRUE(mentions(ds, "instance a1, slot q", ""));
  EXPECT_TRUE(mentions(ds, "instance a1", "duplicate instance id"));
}

TEST(Ontology, SubclassMayNotRedeclareSlot) {
  const auto ds = diagnostics_of(R"({"classes": [
    {"name": "A", "attributes": [{"name": "x", "kind": "number"}]},
    {"name": "B", "parent": "A", "attributes": [{"name": "x", "kind": "text"}]}]})");
  EXPECT_FALSE(ds.empty());
}

TEST(Ontology, AlessiRoundTrip) {
  const Ontology& o = *alessi().ontology;
  const Ontology again = load_ontology(serialize_ontology(o));
  EXPECT_EQ(again, o);
  EXPECT_EQ(serialize_ontology(again), serialize_ontology(o));
}

TEST(Ontology, RandomWorldProperties) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto world = random_world(rng);
    const Ontology o = load_ontology(world.ontology_document());
    EXPECT_EQ(load_ontology(serialize_ontology(o)), o);
    for (const auto& c : o.classes()) {
      // Subclasses keep every inherited slot.
      if (!c.parent) {
        EXPECT_EQ(o.class_depth(c.name), 0u);
        continue;
      }
      EXPECT_EQ(o.class_depth(c.name), o.class_depth(*c.parent) + 1);
      const auto mine = names(o.effective_slots(c.name));
      for (const auto& s : names(o.effective_slots(*c.parent))) {
        EXPECT_NE(std::ranges::find(mine, s), mine.end()) << c.name << " lacks " << s;
      }
    }
    for (const auto& inst : o.instances()) {
      for (const auto& [rel, targets] : inst.relation_values) {
        const auto* decl = o.find_relation(inst.class_name, rel);
        ASSERT_NE(decl, nullptr);
        for (const auto& t : targets) {
          ASSERT_NE(o.find_instance(t), nullptr);
          EXPECT_TRUE(o.conforms_to(o.instance(t).class_name, decl->target_class));
        }
      }
    }
  }
}
