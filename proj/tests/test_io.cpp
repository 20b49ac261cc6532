#include <doctest.h>

#include <sstream>

#include "swnav/report.hpp"
#include "swnav/snapshot.hpp"

using namespace swnav;

namespace {

std::string dump(const ShortcutGraph& g)
{
    std::ostringstream out;
    write_snapshot(out, g);
    return out.str();
}

ShortcutGraph parse(const std::string& text)
{
    std::istringstream in(text);
    return read_snapshot(in);
}

} // namespace

TEST_CASE("snapshot layout")
{
    ShortcutGraph g = empty_graph(Topology::directed_ring(4), 2);
    g.add_shortcut(0, 2);
    g.add_shortcut(0, 3);
    g.add_shortcut(2, 1);
    CHECK(dump(g) == "# swnav graph snapshot\n"
                     "# topology=ring n=4 side=4 capacity=2\n"
                     "vertex_id,target_1,target_2\n"
                     "0,2,3\n"
                     "1\n"
                     "2,1\n"
                     "3\n");
}

TEST_CASE("snapshot round trip is exact")
{
    Rng rng = make_rng(61);
    for (const auto& topo : {Topology::directed_ring(500), Topology::bidirectional_ring(77), Topology::torus(9),
                             Topology::directed_ring(2)}) {
        for (std::size_t cap : {1u, 3u}) {
            ShortcutGraph g = empty_graph(topo, cap);
            evolve(g, 3 * topo.size(), RewireParams{0.2, 61}, rng);
            const std::string text = dump(g);
            const ShortcutGraph back = parse(text);
            CHECK(back == g);
            CHECK(dump(back) == text);
        }
    }
}

TEST_CASE("malformed snapshots are rejected")
{
    const std::string good = "# swnav graph snapshot\n# topology=ring n=3 side=3 capacity=1\nvertex_id,target_1\n0,1\n1\n2\n";
    CHECK_NOTHROW(parse(good));
    auto bad = [&](const std::string& from, const std::string& to) {
        std::string s = good;
        const auto at = s.find(from);
        REQUIRE(at != std::string::npos);
        s.replace(at, from.size(), to);
        CHECK_THROWS_AS(parse(s), InputError);
    };
    bad("# swnav graph snapshot", "# something else");
    bad("topology=ring", "topology=mobius");
    bad(" n=3", " n=x");
    bad(" capacity=1", "");
    bad("vertex_id,target_1\n", "");
    bad("0,1\n", "0,7\n");   // target out of range
    bad("0,1\n", "0,0\n");   // self loop
    bad("0,1\n", "0,1,2\n"); // over capacity
    bad("1\n2\n", "2\n1\n"); // out of order
    bad("2\n", "");          // missing record
    bad("2\n", "2\n3\n");    // extra record
    bad("0,1\n", "0,-1\n");
    CHECK_THROWS_AS(parse("# swnav graph snapshot\n# topology=torus n=10 side=3 capacity=1\nvertex_id\n"), InputError);
    CHECK_THROWS_AS(load_snapshot("/nonexistent/graph.csv"), InputError);
}

TEST_CASE("size lists")
{
    CHECK(parse_sizes("1000") == std::vector<std::size_t>{1000});
    CHECK(parse_sizes("10,20,40") == std::vector<std::size_t>{10, 20, 40});
    const auto run = parse_sizes("1000x2^10");
    REQUIRE(run.size() == 10);
    CHECK(run.front() == 1000);
    CHECK(run.back() == 512000);
    CHECK(parse_sizes("5,10x3^2,100") == std::vector<std::size_t>{5, 10, 30, 100});
    CHECK_THROWS_AS(parse_sizes(""), InputError);
    CHECK_THROWS_AS(parse_sizes("10,5"), InputError);
    CHECK_THROWS_AS(parse_sizes("10,,20"), InputError);
    CHECK_THROWS_AS(parse_sizes("10x2"), InputError);
    CHECK_THROWS_AS(parse_sizes("10x2^0"), InputError);
    CHECK_THROWS_AS(parse_sizes("10x1^3"), InputError);
    CHECK_THROWS_AS(parse_sizes("1x10^40"), InputError);
    CHECK_THROWS_AS(parse_sizes("abc"), InputError);
}

TEST_CASE("step counts")
{
    CHECK(parse_step_count("10n") == StepCount{10, true});
    CHECK(parse_step_count("5000") == StepCount{5000, false});
    CHECK(parse_step_count("10n").resolve(300) == 3000);
    CHECK(parse_step_count("7").resolve(300) == 7);
    CHECK(StepCount{200, true}.to_string() == "200n");
    CHECK_THROWS_AS(parse_step_count("n"), InputError);
    CHECK_THROWS_AS(parse_step_count("-3"), InputError);
    CHECK_THROWS_AS(parse_step_count("3m"), InputError);
}

TEST_CASE("configuration JSON")
{
    ExperimentConfig cfg;
    cfg.topology = LatticeKind::Torus2D;
    cfg.sizes = {100, 400};
    cfg.capacity = 2;
    cfg.p = 0.25;
    cfg.warmup = StepCount{3, true};
    cfg.seed = 99;
    cfg.frozen = true;
    const ExperimentConfig back = config_from_json(config_to_json(cfg));
    CHECK(config_to_json(back) == config_to_json(cfg));
    CHECK(back.topology == LatticeKind::Torus2D);
    CHECK(back.warmup == cfg.warmup);

    const ExperimentConfig parsed = config_from_json(Json::parse(R"({"sizes": "1000x2^3", "warmup": 500, "p": 0.2})"));
    CHECK(parsed.sizes == std::vector<std::size_t>{1000, 2000, 4000});
    CHECK(parsed.warmup == StepCount{500, false});
    CHECK(parsed.p == 0.2);
    CHECK(parsed.seed == ExperimentConfig{}.seed);

    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"colour": 1})")), InputError);
    CHECK_THROWS_AS(config_from_json(Json::parse(R"({"p": "high"})")), InputError);
    CHECK_THROWS_AS(config_from_json(Json::parse("[1, 2]")), InputError);
}

TEST_CASE("result files carry version and config")
{
    ExperimentConfig cfg;
    cfg.sizes = {100, 200};
    cfg.measure_walks = 2000;
    const ExperimentResult r = run_kleinberg_baseline(cfg);
    std::ostringstream csv;
    write_result_csv(csv, r);
    const std::string text = csv.str();
    CHECK(text.rfind("# " + version_string() + "\n# config={", 0) == 0);
    CHECK(text.find("\nn,mean_hops,sqrt_mean_hops,std_error,walks,seed,batch_std_error,exact_tau\n100,") !=
          std::string::npos);

    std::ostringstream js;
    write_result_json(js, r);
    const Json j = Json::parse(js.str());
    CHECK(j["series"] == "harmonic");
    CHECK(j["records"].size() == 2);
    CHECK(j["records"][1]["n"] == 200);
    CHECK(config_from_json(j["config"]).sizes == cfg.sizes);

    std::ostringstream plot;
    write_plot_series(plot, r);
    CHECK(plot.str().find("\n-3.32192809489 ") != std::string::npos);
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
}
