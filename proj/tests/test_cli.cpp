#include "doctest.h"
#include "test_helpers.hpp"

#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace dcl;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / ("dcl_test_" + std::to_string(getpid()) + "_" + name);
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

std::string bin() { return tst::dcl_binary(); }

}  // namespace

TEST_CASE("gen emits canonical edge lists") {
    const auto r = tst::run_proc(bin() + " gen path --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "4 3\n1 2\n2 3\n3 4\n");

    const auto net = tst::run_proc(bin() + " gen t2");
    CHECK(net.exit_code == 0);
    CHECK(parse_graph(net.output) == make_net());

    const auto spider = tst::run_proc(bin() + " gen spider");
    CHECK(parse_graph(spider.output) == make_spider());

    const auto chain = tst::run_proc(bin() + " gen triangle_chain --k 2");
    CHECK(parse_graph(chain.output) == make_triangle_chain(2));

    const auto a = tst::run_proc(bin() + " gen random_dcl --n 80 --seed 7");
    const auto b = tst::run_proc(bin() + " gen random_dcl --n 80 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    const auto gnm = tst::run_proc(bin() + " gen random_gnm --n 10 --m 12 --seed 3");
    CHECK(parse_graph(gnm.output).size() == 12);
}

TEST_CASE("gen rejects bad requests") {
    CHECK(tst::run_proc(bin() + " gen moebius").exit_code == 2);
    CHECK(tst::run_proc(bin() + " gen path").exit_code == 2);          // missing --n
    CHECK(tst::run_proc(bin() + " gen cycle --n 2").exit_code == 2);   // too small
    CHECK(tst::run_proc(bin() + " gen random_gnm --n 3 --m 9 --seed 1").exit_code == 2);
}

TEST_CASE("check prints the decomposition or the obstruction") {
    const auto g = temp_file("example11.txt", serialize_graph(tst::example11_graph()));

    const auto iii = tst::run_proc(bin() + " check " + g.string());
    CHECK(iii.exit_code == 0);
    CHECK(iii.output == "YES\nX1 2 3 8 9 11\nX2 1 10\nF 4-5 6-7\nPATH 4 5 6 7\n");

    const auto iv = tst::run_proc(bin() + " check --route iv " + g.string());
    CHECK(iv.exit_code == 0);
    CHECK(iv.output == "YES\nX1 2 3 8 9 11\nX2 1 10\nF 4-5 6-7\nPATH 4 1 5 6 10 7\n");

    const auto ii = tst::run_proc(bin() + " check --route ii " + g.string());
    CHECK(ii.exit_code == 0);
    CHECK(ii.output == "YES\n");

    const auto c4 = temp_file("c4.txt", serialize_graph(make_cycle(4)));
    const auto no = tst::run_proc(bin() + " check " + c4.string());
    CHECK(no.exit_code == 1);
    CHECK(no.output == "NO CYCLE 1 2 3 4\n");

    const auto net = temp_file("net.txt", serialize_graph(make_net()));
    const auto no2 = tst::run_proc(bin() + " check --route iv " + net.string());
    CHECK(no2.exit_code == 1);
    CHECK(no2.output == "NO T2 1 2 3 4 5 6\n");

    CHECK(tst::run_proc(bin() + " check --route v " + g.string()).exit_code == 2);
}

TEST_CASE("label prints the labeling and optionally a DOT file") {
    const auto g = temp_file("example11b.txt", serialize_graph(tst::example11_graph()));
    const std::string expected = serialize_labeling(tst::example11_labeling());

    const auto x2 = tst::run_proc(bin() + " label " + g.string());
    CHECK(x2.exit_code == 0);
    CHECK(x2.output == expected);

    const auto f = tst::run_proc(bin() + " label --method f " + g.string());
    CHECK(f.exit_code == 0);
    CHECK(f.output == expected);

    const auto dot_path = std::filesystem::temp_directory_path() /
                          ("dcl_test_" + std::to_string(getpid()) + "_out.dot");
    const auto with_dot =
        tst::run_proc(bin() + " label --dot " + dot_path.string() + " " + g.string());
    CHECK(with_dot.exit_code == 0);
    std::ifstream in(dot_path);
    std::string dot((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(dot.find("5 -- 6") != std::string::npos);
    CHECK(dot.find("xlabel") != std::string::npos);

    const auto spider = temp_file("spider.txt", serialize_graph(make_spider()));
    const auto no = tst::run_proc(bin() + " label " + spider.string());
    CHECK(no.exit_code == 1);
    CHECK(no.output == "NO T1 1 2 5 3 6 4 7\n");
}

TEST_CASE("verify reports the smallest witness") {
    const auto g2 = temp_file("g2.txt", serialize_graph(tst::g2_graph()));
    const auto bad = tst::run_proc(bin() + " verify " + g2.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.output == "NOT-DEGREE-COMPLETE H1 1 2 3 4\n");

    const auto g1 = temp_file("g1.txt", serialize_graph(tst::g1_path4()));
    const auto good = tst::run_proc(bin() + " verify " + g1.string());
    CHECK(good.exit_code == 0);
    CHECK(good.output == "DEGREE-COMPLETE\n");
}

TEST_CASE("verify can apply a labeling first") {
    const auto g = temp_file("example11c.txt", serialize_graph(tst::example11_graph()));
    const auto f = temp_file("example11c.lab", serialize_labeling(tst::example11_labeling()));

    // identity labels fail, the published labeling passes
    CHECK(tst::run_proc(bin() + " verify " + g.string()).exit_code == 1);
    const auto ok = tst::run_proc(bin() + " verify --labeling " + f.string() + " " + g.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "DEGREE-COMPLETE\n");
}

TEST_CASE("oracle in both modes") {
    const auto g1 = temp_file("g1o.txt", serialize_graph(tst::g1_path4()));
    const auto g2 = temp_file("g2o.txt", serialize_graph(tst::g2_graph()));

    CHECK(tst::run_proc(bin() + " oracle " + g1.string()).output == "DEGREE-COMPLETE\n");
    CHECK(tst::run_proc(bin() + " oracle " + g1.string()).exit_code == 0);
    CHECK(tst::run_proc(bin() + " oracle --method orientations " + g1.string()).exit_code == 0);

    const auto bad = tst::run_proc(bin() + " oracle " + g2.string());
    CHECK(bad.exit_code == 1);
    CHECK(bad.output == "NOT-DEGREE-COMPLETE 0,2,0,1\n");
    const auto bad2 = tst::run_proc(bin() + " oracle --method orientations " + g2.string());
    CHECK(bad2.exit_code == 1);
    CHECK(bad2.output == "NOT-DEGREE-COMPLETE 0,2,0,1\n");

    CHECK(tst::run_proc(bin() + " oracle --max-vectors 2 " + g1.string()).exit_code == 3);
    const auto big = temp_file("big.txt", serialize_graph(make_gnm(30, 60, 1)));
    CHECK(tst::run_proc(bin() + " oracle --method orientations " + big.string()).exit_code == 3);
}

TEST_CASE("realize prints arcs tail first") {
    const auto g1 = temp_file("g1r.txt", serialize_graph(tst::g1_path4()));

    const auto ok = tst::run_proc(bin() + " realize --vector 0,2,1,0 " + g1.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "2 1\n2 3\n3 4\n");

    const auto spaced = tst::run_proc(bin() + " realize --vector '0, 2, 1, 0' " + g1.string());
    CHECK(spaced.exit_code == 0);
    CHECK(spaced.output == "2 1\n2 3\n3 4\n");

    const auto no = tst::run_proc(bin() + " realize --vector 2,1,0,0 " + g1.string());
    CHECK(no.exit_code == 1);
    CHECK(no.output == "NOT-REALIZABLE\n");

    CHECK(tst::run_proc(bin() + " realize --vector 1,1 " + g1.string()).exit_code == 2);
    CHECK(tst::run_proc(bin() + " realize --vector 1,x,0,0 " + g1.string()).exit_code == 2);
    CHECK(tst::run_proc(bin() + " realize " + g1.string()).exit_code == 2);
}

TEST_CASE("export-dot renders the graph") {
    const auto g2 = temp_file("g2d.txt", serialize_graph(tst::g2_graph()));
    const auto plain = tst::run_proc(bin() + " export-dot " + g2.string());
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("1 -- 3") != std::string::npos);
    CHECK(plain.output.find("xlabel") == std::string::npos);

    const auto lab = temp_file("g2d.lab", "1 2\n2 4\n3 1\n4 3\n");
    const auto labeled =
        tst::run_proc(bin() + " export-dot --labeling " + lab.string() + " " + g2.string());
    CHECK(labeled.exit_code == 0);
    CHECK(labeled.output.find("xlabel") != std::string::npos);
}

TEST_CASE("subcommands read stdin when the input is -") {
    const auto g1 = temp_file("g1s.txt", serialize_graph(tst::g1_path4()));
    const auto direct = tst::run_proc("cat " + g1.string() + " | " + bin() + " verify -");
    CHECK(direct.exit_code == 0);
    CHECK(direct.output == "DEGREE-COMPLETE\n");

    const auto piped =
        tst::run_proc(bin() + " gen random_dcl --n 300 --seed 9 | " + bin() + " check -");
    CHECK(piped.exit_code == 0);
    CHECK(piped.output.substr(0, 4) == "YES\n");
}

TEST_CASE("bad inputs exit with the input-error code") {
    const auto broken = temp_file("broken.txt", "3 2\n1 2\n1 oops\n");
    const auto r = tst::run_proc(bin() + " verify " + broken.string());
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("error") != std::string::npos);
    CHECK(r.output.find("line 3") != std::string::npos);

    CHECK(tst::run_proc(bin() + " verify /no/such/file.txt").exit_code == 2);
    CHECK(tst::run_proc(bin()).exit_code == 2);
    CHECK(tst::run_proc(bin() + " --help").exit_code == 0);
    CHECK(tst::run_proc(bin() + " frobnicate").exit_code == 2);
}
