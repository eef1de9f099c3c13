#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cli_helpers.hpp"

using nlohmann::json;

namespace {

json parse_report(const std::string& text) {
    json doc = json::parse(text);
    REQUIRE(doc.contains("schema_version"));
    REQUIRE(doc.contains("payload"));
    return doc;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bounds with a vanishing dilatation emits the classical thresholds") {
    const cli::Result koebe = cli::run("bounds --phi koebe --omega zero");
    CHECK(koebe.exit_code == 0);
    const json kb = parse_report(koebe.output)["payload"]["alpha_bounds"];
    CHECK(kb["shear_stable"].get<double>() == 0.25);
    CHECK(kb["derivative_transform"].get<double>() == 0.25);

    const cli::Result hp = cli::run("bounds --phi halfplane --omega zero");
    CHECK(hp.exit_code == 0);
    const json hb = parse_report(hp.output)["payload"]["alpha_bounds"];
    CHECK(hb["shear_stable"].get<double>() == 0.25);
    CHECK(hb["derivative_transform"].get<double>() == 0.5);
}

TEST_CASE("repeated runs are byte-identical apart from the timestamp") {
    const std::string cmd = "bounds --phi koebe --omega linear --seed 11";
    const cli::Result a = cli::run(cmd);
    const cli::Result b = cli::run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(cli::strip_timestamp(a.output) == cli::strip_timestamp(b.output));

    const std::string scan_cmd =
        "scan --scan slices --phi halfplane --omega linear --kind shear --alpha 0.2 "
        "--levels 1 --order 64 --seed 5";
    const cli::Result c = cli::run(scan_cmd);
    const cli::Result d = cli::run(scan_cmd);
    CHECK(c.exit_code == 0);
    CHECK(cli::strip_timestamp(c.output) == cli::strip_timestamp(d.output));
}

TEST_CASE("transform reports the map and its Jacobian floor") {
    // this shear's derivative coefficients grow like 2 n^2, so an order-64
    // truncation is only trustworthy well inside the disc; rmax 0.7 keeps the
    // tail below 1e-6 while the grid ceiling would leave O(10) noise
    const cli::Result r = cli::run("transform --phi koebe --omega linear --kind shear "
                                   "--alpha 0.5 --order 64 --levels 2 --rmax 0.7");
    CHECK(r.exit_code == 0);
    const json payload = parse_report(r.output)["payload"];
    CHECK(payload["map"]["kind"] == "shear");
    CHECK(payload["map"]["alpha"].get<double>() == 0.5);
    CHECK(payload["sense_preserving_on_grid"].get<bool>());
    CHECK(payload["jacobian_min"]["value"].get<double>() > 0.0);
}

TEST_CASE("certify exit code tracks the verdict") {
    const cli::Result ok = cli::run("certify --phi identity --omega linear --kind shear "
                                    "--alpha 0.2 --order 128 --criterion becker");
    CHECK(ok.exit_code == 0);
    const json jok = parse_report(ok.output)["payload"]["criterion"];
    CHECK(jok["verdict"] == "certified");

    const cli::Result bad = cli::run("certify --phi halfplane --omega linear --kind shear "
                                     "--alpha 1.0 --order 256 --criterion becker");
    CHECK(bad.exit_code == 1);
    const json jbad = parse_report(bad.output)["payload"]["criterion"];
    CHECK(jbad["verdict"] == "not_certified");
}

TEST_CASE("scan exit code tracks collisions") {
    // mu = -1, alpha = -1 lands on the cubic power integral, which collides
    const cli::Result mu = cli::run("scan --scan mu --phi mu:re=-1 --alpha -1 --levels 2");
    CHECK(mu.exit_code == 1);
    const json jmu = parse_report(mu.output)["payload"];
    CHECK(jmu["collision"]["confirmed"].get<bool>());
    CHECK(jmu["c"][0].get<double>() == 3.0);

    const cli::Result gamma = cli::run("scan --scan gamma --phi gamma:re=-2 --alpha -1 --levels 2");
    CHECK(gamma.exit_code == 1);

    // a gentle shear keeps every slice injective
    const cli::Result clean = cli::run("scan --scan slices --phi halfplane --omega linear "
                                       "--kind shear --alpha 0.2 --levels 1 --order 64");
    CHECK(clean.exit_code == 0);
    const json jc = parse_report(clean.output)["payload"];
    CHECK(jc["slices"]["all_injective"].get<bool>());
}

TEST_CASE("render writes the polar-grid SVG") {
    const std::string path = "cli_render_test.svg";
    std::remove(path.c_str());
    const cli::Result r = cli::run("render --phi koebe --omega zero --kind shear --alpha 0 "
                                   "--order 64 --svg " + path);
    CHECK(r.exit_code == 0);
    const json payload = parse_report(r.output)["payload"];
    CHECK(payload["polylines"].get<int>() == 44);

    std::ifstream in(path);
    REQUIRE(in.good());
    const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t count = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos;
         pos = svg.find("<polyline", pos + 1)) {
        ++count;
    }
    CHECK(count == 44);
    std::remove(path.c_str());

    CHECK(cli::run("render --phi koebe --omega zero --kind shear --alpha 0").exit_code == 2);
}

TEST_CASE("configuration errors exit with code 2") {
    CHECK(cli::run("bounds --phi unknown_map --omega zero").exit_code == 2);
    CHECK(cli::run("transform --phi koebe --omega linear --alpha 0.5 --order 4096").exit_code == 2);
    CHECK(cli::run("certify --phi identity --omega zero --kind shear --alpha 0 "
                   "--criterion theorem_c --c -1,0").exit_code == 2);
    CHECK(cli::run("transform --config does_not_exist.json").exit_code == 2);
    CHECK(cli::run("scan --scan mu --phi mu:re=0 --alpha 0.5 --levels 1").exit_code == 2);
}

TEST_CASE("config files supply defaults; explicit flags win") {
    const std::string path = "cli_config_test.json";
    {
        std::ofstream out(path);
        out << R"({"phi": "halfplane", "omega": "zero", "kind": "f_alpha", )"
            << R"("alpha": 0.25, "order": 64, "grid_levels": 1})" << "\n";
    }
    const cli::Result base = cli::run("transform --config " + path);
    CHECK(base.exit_code == 0);
    const json jb = parse_report(base.output)["payload"]["map"];
    CHECK(jb["kind"] == "f_alpha");
    CHECK(jb["alpha"].get<double>() == 0.25);
    CHECK(jb["description"].get<std::string>().find("halfplane") != std::string::npos);

    const cli::Result over = cli::run("transform --config " + path + " --alpha 0.125");
    CHECK(over.exit_code == 0);
    CHECK(parse_report(over.output)["payload"]["map"]["alpha"].get<double>() == 0.125);
    std::remove(path.c_str());
}

TEST_CASE("reports go to --out unchanged") {
    const std::string path = "cli_out_test.json";
    std::remove(path.c_str());
    const cli::Result r = cli::run("bounds --phi koebe --omega zero --out " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());  // nothing on stdout when --out is given
    std::ifstream in(path);
    REQUIRE(in.good());
    json doc;
    in >> doc;
    CHECK(doc["command"] == "bounds");
    CHECK(doc["payload"]["alpha_bounds"]["shear_stable"].get<double>() == 0.25);
    std::remove(path.c_str());
}

}  // TEST_SUITE
