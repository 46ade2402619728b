#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bredon/io.hpp"
#include "bredon/report.hpp"

using namespace bredon;
using nlohmann::json;

namespace {

std::string corpus_file(const std::string& name)
{
    return std::string(BREDON_CORPUS_DIR) + "/" + name + ".json";
}

std::string kind_of(const std::string& text)
{
    try {
        auto doc = parse_input_text(text);
        if (doc.mode == InputMode::Coxeter || doc.mode == InputMode::GraphProduct)
            to_coxeter(doc);
        else
            to_complex(doc);
    } catch (const InputError& e) {
        return e.kind();
    }
    return "";
}

// Every number that appears in the text rendering also appears somewhere
// in the JSON document.
void collect_numbers(const json& j, std::ostringstream& os)
{
    if (j.is_object() || j.is_array())
        for (const auto& [_, v] : j.items())
            collect_numbers(v, os);
    else
        os << j.dump() << " ";
}

}  // namespace

TEST_CASE("every corpus file parses and round-trips canonically")
{
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(BREDON_CORPUS_DIR)) {
        auto doc = load_input(entry.path().string());
        auto once = canonical_dump(doc);
        auto twice = canonical_dump(parse_input_text(once));
        CHECK(once == twice);
        ++files;
    }
    CHECK(files >= 30);
}

TEST_CASE("schema errors")
{
    CHECK(kind_of("not json") == "ParseError");
    CHECK(kind_of("[]") == "SchemaError");
    CHECK(kind_of(R"({"mode":"nope"})") == "SchemaError");
    CHECK(kind_of(R"({"mode":"coxeter","generators":["a"]})") == "SchemaError");
    CHECK(kind_of(R"({"mode":"coxeter","generators":["a"],"matrix":[[1]],"extra":1})") == "SchemaError");
    CHECK(kind_of(R"({"mode":"coxeter","generators":["a","b"],"matrix":[[1,-2],[2,1]]})") == "SchemaError");
    CHECK(kind_of(R"({"mode":"coxeter","generators":["a","b"],"matrix":[[1,3],[2,1]]})") == "InvalidCoxeterMatrix");
    CHECK(kind_of(R"({"mode":"graph_product","vertices":[{"name":"a","order":1}]})") == "InvalidOrder");
    CHECK(kind_of(R"({"mode":"graph_product","vertices":[{"name":"a","order":2}],"edges":[["a","b"]]})") ==
          "InvalidGraph");
    CHECK(kind_of(R"({"mode":"poset_omega","poset":{"elements":["a","b"],"relations":[["a","b"],["b","a"]]}})") ==
          "CycleError");
    CHECK(kind_of(R"({"mode":"poset_omega","poset":{"elements":["a","b"],"relations":[["a","b"]]},
                      "omega_classes":[["a","b"]]})") == "ClassNotAntichain");
    CHECK(kind_of(R"({"mode":"finite_development","degree":3,"group":[[1,0,2],[1,2,0]],
                      "poset":{"elements":["U","T"],"relations":[["U","T"]]},
                      "locals":{"U":[[1,0,2],[1,2,0]],"T":[[1,0,2],[1,2,0]]}})") == "NotStrict");
    CHECK(kind_of(R"({"mode":"finite_development","degree":3,"group":[[1,0]],
                      "poset":{"elements":["U"]},"locals":{"U":[]}})") == "DegreeMismatch");
    CHECK(kind_of(R"({"mode":"finite_development","degree":2,"group":[[0,0]],
                      "poset":{"elements":["U"]},"locals":{"U":[]}})") == "InvalidPermutation");
    CHECK(kind_of(R"({"mode":"finite_development","degree":2,"group":[[1,0]],
                      "poset":{"elements":["U"]},"locals":{}})") == "InvalidInput");
    CHECK_THROWS_AS(load_input("/nonexistent/file.json"), InputError);
}

TEST_CASE("cd reports")
{
    auto r = run_cd(load_input(corpus_file("racg_cycle_5")));
    CHECK(r.data["dimension"] == 2);
    CHECK(r.data["schema_version"] == 1);
    CHECK(r.exit_code == exit_code::ok);
    CHECK(run_cd(load_input(corpus_file("ngon_4"))).data["dimension"] == 2);
    CHECK(run_cd(load_input(corpus_file("single_vertex"))).data["dimension"] == 0);
    CHECK(run_cd(load_input(corpus_file("graph_pentagon"))).data["dimension"] == 2);
    CHECK(run_cd(load_input(corpus_file("s3_chain"))).data["dimension"] == 0);

    auto w = run_cd(load_input(corpus_file("ngon_6")));
    CHECK(w.data["witness"]["label"] == "f");
    CHECK(w.data["witness"]["n"] == 2);
    CHECK(w.data["witness"]["group"]["betti"] == 1);
}

TEST_CASE("headline equals the largest degree in the table")
{
    for (const auto& entry : std::filesystem::directory_iterator(BREDON_CORPUS_DIR)) {
        auto r = run_cd(load_input(entry.path().string()));
        int best = -1;
        for (const auto& row : r.data["table"])
            for (const auto& d : row["nonzero"])
                best = std::max(best, d["n"].get<int>());
        CHECK_MESSAGE(r.data["dimension"] == best, entry.path().string());
    }
}

TEST_CASE("vcd reports")
{
    auto d = run_vcd(load_input(corpus_file("infinite_dihedral")));
    CHECK(d.data["dimension"] == 1);
    CHECK(d.data["routes_agree"] == true);
    CHECK(run_vcd(load_input(corpus_file("type_h3"))).data["dimension"] == 0);
    CHECK(run_vcd(load_input(corpus_file("racg_cycle_6"))).data["dimension"] == 2);
    CHECK_THROWS_AS(run_vcd(load_input(corpus_file("ngon_3"))), InputError);
}

TEST_CASE("verify reports")
{
    auto doc = load_input(corpus_file("s3_chain"));
    for (auto t : {Theorem::Decomposition, Theorem::Bredon, Theorem::CellIdentities, Theorem::Acyclic})
        CHECK(run_verify(doc, t).exit_code == exit_code::ok);
    auto bad = run_verify(load_input(corpus_file("two_points")), Theorem::Acyclic);
    CHECK(bad.exit_code == exit_code::verify_mismatch);
    CHECK(bad.data["failures"].size() == 1);
    CHECK_THROWS_AS(run_verify(load_input(corpus_file("type_a2")), Theorem::Bredon), InputError);
    CHECK(parse_theorem("lemma34") == Theorem::CellIdentities);
    CHECK_THROWS_AS(parse_theorem("other"), InputError);
}

TEST_CASE("develop reports")
{
    auto r = run_develop(load_input(corpus_file("s3_chain")), false);
    CHECK(r.data["vertices"] == 4);
    CHECK(r.data["edges"] == 3);
    CHECK_FALSE(r.data.contains("faces"));
    auto dump = run_develop(load_input(corpus_file("s3_chain")), true);
    CHECK(dump.data["faces"].size() == 2);
    CHECK(run_develop(load_input(corpus_file("s3_whole")), false).data["vertices"] == 1);
    CHECK(run_develop(load_input(corpus_file("s3_antichain")), false).data["connected_components"] == 6);
    RunOptions tiny;
    tiny.size_cap = 5;
    CHECK_THROWS_AS(run_develop(load_input(corpus_file("s3_chain")), false, tiny), SizeCapExceeded);
}

TEST_CASE("reports are deterministic and independent of the worker count")
{
    RunOptions one;
    one.jobs = 1;
    RunOptions many;
    many.jobs = 4;
    for (const auto* name : {"s4_branch", "d4_square"}) {
        auto doc = load_input(corpus_file(name));
        auto a = run_verify(doc, Theorem::Decomposition, one);
        auto b = run_verify(doc, Theorem::Decomposition, many);
        CHECK(a.data == b.data);
        CHECK(a.text == b.text);
    }
    auto doc = load_input(corpus_file("racg_cycle_7"));
    CHECK(run_vcd(doc, one).data == run_vcd(doc, many).data);
}

TEST_CASE("text numbers also appear in the JSON report")
{
    auto r = run_verify(load_input(corpus_file("d4_square")), Theorem::Decomposition);
    std::ostringstream os;
    collect_numbers(r.data, os);
    const auto numbers = os.str();
    std::istringstream text(r.text);
    std::string word;
    while (text >> word) {
        std::string digits;
        for (char c : word)
            if (std::isdigit(static_cast<unsigned char>(c)))
                digits += c;
            else if (!digits.empty())
                break;
        if (!digits.empty())
            CHECK_MESSAGE(numbers.find(digits) != std::string::npos, word);
    }
}
