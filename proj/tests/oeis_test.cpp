#include "doctest.h"

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "httplib.h"

#include "cfseq/error.hpp"
#include "cfseq/meta.hpp"
#include "cfseq/oeis.hpp"

using namespace cfseq;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(CFSEQ_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<Rational> rats(std::vector<int> v) {
    std::vector<Rational> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("b-file parsing") {
    BFile b = parse_bfile("1 1\n2 3\n3 4");
    REQUIRE(b.entries.size() == 3);
    CHECK(b.entries[0].index == 1);
    CHECK(b.entries[0].value == 1);
    CHECK(b.entries[2].index == 3);
    CHECK(b.entries[2].value == 4);

    BFile c = parse_bfile("# comment\n0 0\n1 1");
    REQUIRE(c.entries.size() == 2);
    CHECK(c.entries[0].index == 0);

    CHECK_THROWS_WITH_AS(parse_bfile("1 x"), doctest::Contains("line 1"), InputError);
    CHECK_THROWS_AS(parse_bfile("2 5\n1 3"), InputError);
    CHECK_THROWS_AS(parse_bfile("1 2 3"), InputError);
    CHECK(parse_bfile("").entries.empty());
}

TEST_CASE("b-file serialization round trip") {
    std::string text = "0 2\n1 1\n2 3\n";
    CHECK(serialize_bfile(parse_bfile(text)) == text);
    // fixtures round-trip to their data lines
    std::string lucas = fixture("b000032.txt");
    std::string expected;
    std::istringstream in(lucas);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') expected += line + "\n";
    CHECK(serialize_bfile(parse_bfile(lucas)) == expected);
}

TEST_CASE("prefix comparison") {
    CFiniteSeq fib = make(rats({1, 1}), rats({0, 1}));
    BFile lucas = parse_bfile(fixture("b000032.txt"), "A000032");

    MetaRecurrence mr = meta_msection(fib);
    PrefixReport rep = compare_prefix(mr.coeff_seqs[0], lucas, 1);
    CHECK(rep.compared == 40);
    CHECK(rep.matched == 40);
    CHECK(!rep.mismatch);

    // aligned at the wrong offset the match breaks immediately
    PrefixReport off = compare_prefix(mr.coeff_seqs[0], lucas, 0);
    CHECK(off.matched < 3);
    CHECK(off.mismatch);

    PrefixReport empty = compare_prefix(fib, BFile{}, 0);
    CHECK(empty.compared == 0);
    CHECK(empty.matched == 0);

    BFile wrong = parse_bfile("0 0\n1 1\n2 1\n3 99\n4 3");
    PrefixReport mis = compare_prefix(fib, wrong, 0);
    CHECK(mis.matched == 3);
    CHECK(mis.mismatch);
    CHECK(mis.mismatch_position == 3);
    CHECK(mis.seq_value == "2");
    CHECK(mis.bfile_value == "99");

    // index gap ends the aligned range
    BFile gap = parse_bfile("0 0\n1 1\n3 2");
    CHECK(compare_prefix(fib, gap, 0).compared == 2);
}

TEST_CASE("identifier validation") {
    CHECK(valid_oeis_id("A000045"));
    CHECK(!valid_oeis_id("45"));
    CHECK(!valid_oeis_id("A0045"));
    CHECK(!valid_oeis_id("B000045"));
    CHECK(!valid_oeis_id("A00004x"));
}

TEST_CASE("fetch refuses without the network flag") {
    FetchOptions opts; // network defaults to off
    CHECK_THROWS_AS(fetch_bfile("A000045", opts), Refusal);
    CHECK_THROWS_AS(fetch_bfile("45", opts), InputError);
}

TEST_CASE("fetch against a local server") {
    httplib::Server server;
    std::string body = fixture("b000045.txt");
    server.Get("/A000045/b000045.txt",
               [&](const httplib::Request&, httplib::Response& res) {
                   res.set_content(body, "text/plain");
               });
    int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    FetchOptions opts;
    opts.network = true;
    opts.host = "127.0.0.1";
    opts.port = port;
    opts.use_tls = false;
    opts.timeout_seconds = 5;

    BFile fetched = fetch_bfile("A000045", opts);
    CHECK(fetched.id == "A000045");
    REQUIRE(fetched.entries.size() == 41);
    CHECK(fetched.entries[10].value == 55);

    CHECK_THROWS_AS(fetch_bfile("A999999", opts), HttpError);

    server.stop();
    worker.join();

    FetchOptions dead = opts;
    dead.port = 1; // nothing listens there
    dead.timeout_seconds = 1;
    CHECK_THROWS_AS(fetch_bfile("A000045", dead), NetworkError);
}
