// impactcalc command-line front end: ledger evaluation, what-if analysis,
// sub-calculators and the HTTP service.

#include "impactcalc/analysis.hpp"
#include "impactcalc/api.hpp"
#include "impactcalc/cpi.hpp"
#include "impactcalc/document.hpp"
#include "impactcalc/edweek.hpp"
#include "impactcalc/error.hpp"
#include "impactcalc/hai.hpp"
#include "impactcalc/render.hpp"
#include "impactcalc/server.hpp"
#include "impactcalc/version.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace impactcalc;

namespace {

std::string read_text(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw CalcError(ErrorKind::NotFound, "cannot open " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Decimal> parse_decimals(const std::vector<std::string>& texts) {
    std::vector<Decimal> out;
    for (const auto& t : texts) out.push_back(Decimal::parse(t));
    return out;
}

io::Defaults defaults_or_empty(const std::string& file) {
    return file.empty() ? io::Defaults{} : io::load_defaults_file(file);
}

io::HttpServer* g_server = nullptr;

void on_signal(int) {
    if (g_server) g_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cost/benefit ledger engine with what-if analysis and sub-calculators"};
    app.set_version_flag("--version", std::string(kEngineVersion));
    app.require_subcommand(1);

    std::string file;
    std::string format = "text";
    std::string param;
    std::vector<std::string> values;
    std::vector<std::string> params;
    std::string lo, hi, tol = "1", delta = "0.1";
    bool sequential = false;

    auto* eval = app.add_subcommand("eval", "Evaluate a scenario and print the ledger report as JSON");
    eval->add_option("file", file, "Scenario document")->required();

    auto* report = app.add_subcommand("report", "Render the ledger report as text or CSV");
    report->add_option("file", file, "Scenario document")->required();
    report->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    auto* sweep = app.add_subcommand("sweep", "USD net over a list of parameter values (CSV)");
    sweep->add_option("file", file, "Scenario document")->required();
    sweep->add_option("--param", param, "Parameter path: name or item.arg")->required();
    sweep->add_option("--values", values, "Values to substitute")->required()->delimiter(',');
    sweep->add_flag("--sequential", sequential, "Evaluate points on one thread");

    auto* breakeven = app.add_subcommand("breakeven", "Parameter value where the USD net crosses zero (CSV)");
    breakeven->add_option("file", file, "Scenario document")->required();
    breakeven->add_option("--param", param, "Parameter path")->required();
    breakeven->add_option("--lo", lo, "Lower bracket")->required();
    breakeven->add_option("--hi", hi, "Upper bracket")->required();
    breakeven->add_option("--tol", tol, "Accepted |net| in USD")->capture_default_str();

    auto* tornado = app.add_subcommand("tornado", "Rank parameters by USD net span under +/- delta (CSV)");
    tornado->add_option("file", file, "Scenario document")->required();
    tornado->add_option("--params", params, "Parameter paths")->required()->delimiter(',');
    tornado->add_option("--delta", delta, "Relative perturbation")->capture_default_str();

    auto* subcalc = app.add_subcommand("subcalc", "Sub-calculators");
    subcalc->require_subcommand(1);

    std::string incidence, cost_low, cost_high, reduction;
    auto* apic = subcalc->add_subcommand("apic", "HAI cost per 1000 patient days and potential savings");
    apic->add_option("--incidence", incidence, "HAI incidence per 1000 patient days")->required();
    apic->add_option("--cost-low", cost_low, "Lower mean attributable cost per HAI")->required();
    apic->add_option("--cost-high", cost_high, "Upper mean attributable cost per HAI")->required();
    apic->add_option("--reduction", reduction, "Potential decrease in HAI cases, as a fraction")->required();

    std::string defaults_file;
    auto* tmit = subcalc->add_subcommand("tmit", "Per-infection annual cost and excess LOS report");
    tmit->add_option("file", file, "JSON with profile and entries")->required();
    tmit->add_option("--defaults", defaults_file, "Defaults document");

    auto* edweek = subcalc->add_subcommand("edweek", "School-district cost breakdown");
    edweek->add_option("file", file, "JSON with the district inputs")->required();
    edweek->add_option("--defaults", defaults_file, "Defaults document");

    std::string weights_csv, inflation_csv, official_csv, base_month;
    auto* cpi = subcalc->add_subcommand("cpi", "Official vs reweighted CPI inflation per month (CSV)");
    cpi->add_option("--weights", weights_csv, "Monthly expenditure weights CSV")->required();
    cpi->add_option("--inflation", inflation_csv, "Monthly 12-month category inflation CSV (percent)")->required();
    auto* official_opt = cpi->add_option("--official-weights", official_csv, "Official weights CSV");
    auto* base_opt = cpi->add_option("--base-month", base_month, "Use this month's weights as the official basket");
    official_opt->excludes(base_opt);

    int port = 8080;
    std::string store, host = "0.0.0.0", webui;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serve->add_option("--port", port, "Listen port")->capture_default_str();
    serve->add_option("--host", host, "Listen address")->capture_default_str();
    serve->add_option("--store", store, "Scenario store directory (default $IMPACTCALC_STORE or ./scenarios)");
    serve->add_option("--defaults", defaults_file, "Defaults document");
    serve->add_option("--webui", webui, "Static web UI bundle to serve at /");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            std::cout << io::report_to_json(compute_ledger(io::load_scenario_file(file))).dump(2) << "\n";
        } else if (*report) {
            auto rep = compute_ledger(io::load_scenario_file(file));
            std::cout << io::render_report(rep, io::report_format_from_string(format));
        } else if (*sweep) {
            auto result = impactcalc::sweep(io::load_scenario_file(file), param, parse_decimals(values),
                                            SweepOptions{!sequential});
            std::cout << io::sweep_to_csv(result);
        } else if (*breakeven) {
            auto result = break_even(io::load_scenario_file(file), param, Decimal::parse(lo), Decimal::parse(hi),
                                     Decimal::parse(tol));
            std::cout << io::break_even_to_csv(param, result);
        } else if (*tornado) {
            auto bars = impactcalc::tornado(io::load_scenario_file(file), params, Decimal::parse(delta));
            std::cout << io::tornado_to_csv(bars);
        } else if (*apic) {
            hai::ApicInput in{Decimal::parse(incidence), Decimal::parse(cost_low), Decimal::parse(cost_high),
                              Decimal::parse(reduction)};
            auto estimated = hai::apic_estimated_cost(in);
            auto savings = hai::apic_potential_savings(estimated, in.reduction_fraction);
            io::Json out{{"estimated_cost_per_1000_patient_days",
                          {{"low", io::amount_text(estimated.low, Unit::USD)},
                           {"high", io::amount_text(estimated.high, Unit::USD)}}},
                         {"potential_savings",
                          {{"low", io::amount_text(savings.low, Unit::USD)},
                           {"high", io::amount_text(savings.high, Unit::USD)}}}};
            std::cout << out.dump(2) << "\n";
        } else if (*tmit) {
            auto req = io::tmit_request_from_json(io::parse_json(read_text(file)), defaults_or_empty(defaults_file));
            std::cout << io::tmit_report_to_json(hai::tmit_report(req.profile, req.entries)).dump(2) << "\n";
        } else if (*edweek) {
            auto in = io::edweek_input_from_json(io::parse_json(read_text(file)), defaults_or_empty(defaults_file));
            std::cout << io::edweek_breakdown_to_json(edweek::edweek_cost(in)).dump(2) << "\n";
        } else if (*cpi) {
            std::string inflation = read_text(inflation_csv);
            auto covid = cpi::series_from_csv(read_text(weights_csv), inflation);
            cpi::CpiSeries official;
            if (!official_csv.empty()) {
                official = cpi::series_from_csv(read_text(official_csv), inflation);
            } else if (!base_month.empty()) {
                official = cpi::with_fixed_weights(covid, base_month);
            } else {
                throw CalcError(ErrorKind::ValidationError, "give --official-weights or --base-month");
            }
            std::cout << cpi::indices_to_csv(cpi::compare_indices(official, covid));
        } else if (*serve) {
            auto store_path = store.empty() ? io::default_store_path() : std::filesystem::path(store);
            io::Api api(std::make_shared<io::ScenarioStore>(store_path), defaults_or_empty(defaults_file));
            io::HttpServer server(std::move(api));
            if (!webui.empty()) server.mount_static(webui);
            g_server = &server;
            std::signal(SIGINT, on_signal);
            std::signal(SIGTERM, on_signal);
            std::cerr << "impactcalc " << kEngineVersion << " listening on " << host << ":" << port << " (store "
                      << store_path.string() << ")\n";
            if (!server.listen(host, port)) {
                std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
                return 1;
            }
        }
    } catch (const CalcError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
