#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "sdl/generators.hpp"
#include "sdl/io.hpp"

using namespace sdl;

TEST_CASE("system documents round trip") {
    FactSystem sys = fixtures::semi_system();
    json doc = system_to_json(sys);
    CHECK(document_kind(doc) == "system");
    FactSystem back = system_from_json(doc);
    CHECK(back.to == sys.to);
    CHECK(back.onto == sys.onto);
    CHECK(back.into == sys.into);
    CHECK(system_to_json(back) == doc);
}

TEST_CASE("omitted onto and into are computed") {
    json doc;
    doc["kind"] = "system";
    doc["ground"] = {"1", "2", "3", "4"};
    Relation to = fixtures::semi_to();
    json rows = json::array();
    for (int x = 0; x < 4; ++x) {
        json row = json::array();
        for (int y = 0; y < 4; ++y) row.push_back(to(x, y));
        rows.push_back(row);
    }
    doc["to"] = rows;
    FactSystem sys = system_from_json(doc);
    CHECK(sys.onto == fixtures::semi_system().onto);
}

TEST_CASE("invalid systems are rejected with the error code") {
    json doc;
    doc["kind"] = "system";
    doc["ground"] = {"1", "2", "3", "4"};
    Relation to = fixtures::ext_to();
    json rows = json::array();
    for (int x = 0; x < 4; ++x) {
        json row = json::array();
        for (int y = 0; y < 4; ++y) row.push_back(to(x, y));
        rows.push_back(row);
    }
    doc["to"] = rows;
    try {
        system_from_json(doc);
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        CHECK(e.code() == ErrorCode::InvalidSystem);
    }
}

TEST_CASE("lattice documents round trip") {
    Lattice L = weak_order_sn(3);
    json doc = lattice_to_json(L);
    Lattice back = lattice_from_json(doc);
    CHECK(back.n == L.n);
    for (int i = 0; i < L.n; ++i) CHECK(back.up[i] == L.up[i]);
    CHECK(lattice_to_json(back) == doc);
}

TEST_CASE("lattice documents accept cover lists") {
    json doc;
    doc["kind"] = "lattice";
    doc["size"] = 4;
    doc["covers"] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    Lattice L = lattice_from_json(doc);
    CHECK(is_isomorphic(L, boolean_lattice(2)));
}

TEST_CASE("two-set documents round trip") {
    MarkowskySystem ms = markowsky_system(boolean_lattice(2));
    json doc = two_set_to_json(ms.rel);
    TwoSetRelation back = two_set_from_json(doc);
    CHECK(back.adj == ms.rel.adj);
    CHECK(two_set_to_json(back) == doc);
}

TEST_CASE("kind mismatches are flagged") {
    json doc = lattice_to_json(chain(2));
    CHECK_THROWS_AS(system_from_json(doc), DomainError);
    json nokind = json::object();
    CHECK_THROWS_AS(document_kind(nokind), DomainError);
}

TEST_CASE("classification reports serialize") {
    ClassifyReport r = classify(fixtures::semi_system());
    json doc = classify_to_json(r);
    CHECK(doc["kind"] == "report");
    CHECK(doc["semidistributive"] == true);
    CHECK(doc["extremal"] == false);
    CHECK(doc["congruence_uniform"] == true);
}

TEST_CASE("dot output") {
    std::string chain_dot = render_dot(lattice_to_json(chain(2)));
    CHECK(chain_dot.find("n0 -> n1") != std::string::npos);

    std::string sys_dot = dot_of_system(fixtures::semi_system());
    // six non-loop arrows, no loops
    CHECK(sys_dot.find("n0 -> n0") == std::string::npos);
    int arrows = 0;
    for (size_t pos = 0; (pos = sys_dot.find(" -> ", pos)) != std::string::npos; ++pos)
        ++arrows;
    CHECK(arrows == 6);
    // decorations for onto and into arrows
    CHECK(sys_dot.find("label=\"o\"") != std::string::npos);
    CHECK(sys_dot.find("label=\"i\"") != std::string::npos);

    CHECK_THROWS_AS(render_dot(classify_to_json(classify(fixtures::semi_system()))),
                    DomainError);
}

TEST_CASE("documents survive the filesystem") {
    json doc = system_to_json(fixtures::semi_system());
    save_document(doc, "/tmp/ftfsdl_io_test.json");
    json back = load_document("/tmp/ftfsdl_io_test.json");
    CHECK(back == doc);
    CHECK_THROWS_AS(load_document("/tmp/definitely_missing_file.json"), DomainError);
}
