#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "plg/action_classifier.hpp"
#include "plg/error.hpp"
#include "plg/io.hpp"
#include "plg/verbal_orders.hpp"
#include "plg/witness_gen.hpp"

using namespace plg;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::vector<std::string> words;
  std::vector<std::string> files;
  int radius = 3;
  int depth = 8;
  int k = 1;
  int n_max = 5;
  int random = 0;
  std::uint64_t seed = 1;
  std::string out;
};

const std::string& single_word(const Options& o) {
  if (o.words.size() != 1) throw Error(ErrorCode::InvalidArgument, "expected exactly one --word");
  return o.words.front();
}

void emit(const Options& o, const Json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + o.out);
  f << j.dump(2) << "\n";
  std::cout << "wrote " << o.out << "\n";
}

Rational eval0(const ReducedWord& w, const PLHomeo& f, const PLHomeo& g) {
  const std::vector<PLHomeo> as{f, g};
  return apply_word(w, as, Rational(0));
}

/// Word over the generators of an action; letters outside it are rejected.
ReducedWord action_word(const std::string& text, const Assignment& action) {
  const ReducedWord w = parse_word(text, static_cast<int>(action.size()));
  if (w.alphabet_size() > static_cast<int>(action.size())) {
    throw Error(ErrorCode::MissingGenerator, "word '" + text + "' uses a generator with no map");
  }
  return w;
}

int run_reduce(const Options& o) {
  const ReducedWord w = parse_word(single_word(o));
  std::cout << "reduced: " << to_string(w) << "\n";
  std::cout << "length: " << w.length() << "\n";
  std::cout << "syllables: " << w.num_syllables() << "\n";
  return kOk;
}

int run_violate(const Options& o) {
  std::vector<ReducedWord> words;
  if (o.random > 0) {
    std::mt19937_64 rng(o.seed);
    for (int i = 0; i < o.random; ++i) words.push_back(random_mixed_sign_word(rng, 2, 16, 2));
  } else {
    words.push_back(parse_word(single_word(o)));
  }
  if (words.size() == 1) {
    const auto v = construct_violation(words.front());
    Json j;
    j["word"] = to_string(v.word);
    j["f"] = to_json(v.f);
    j["g"] = to_json(v.g);
    emit(o, j);
    std::cout << "f(0) = " << to_string(v.f0) << " > 0\n";
    std::cout << "g(0) = " << to_string(v.g0) << " > 0\n";
    std::cout << "W(f,g)(0) = " << to_string(v.w0) << " < 0\n";
    return kOk;
  }
  int failures = 0;
  for (const auto& w : words) {
    const auto v = construct_violation(w);
    const bool ok = eval0(w, v.f, v.g) < 0 && v.f(Rational(0)) > 0 && v.g(Rational(0)) > 0;
    failures += !ok;
    std::cout << (ok ? "ok   " : "FAIL ") << to_string(w) << "  W(f,g)(0) = " << to_string(v.w0) << "\n";
  }
  std::cout << words.size() - failures << "/" << words.size() << " verified\n";
  return failures == 0 ? kOk : kNegative;
}

int run_verify_cert(const Options& o) {
  const auto c = certificate_from_json(read_json_file(o.files.at(0)));
  const auto report = verify_certificate(c);
  if (report.ok()) {
    std::cout << "ok\n";
    return kOk;
  }
  std::cout << "rejected: " << describe(*report.failure) << "\n";
  return kNegative;
}

int run_word_image(const Options& o) {
  const auto c = certificate_from_json(read_json_file(o.files.at(0)));
  const auto r = word_image(c, parse_word(single_word(o)));
  std::cout << "word: " << to_string(r.word) << "\n";
  if (r.form.k > 0) {
    std::cout << "conjugated: " << to_string(r.form.conjugated) << " (a^" << r.form.conjugator_power << ")\n";
  }
  for (const auto& s : r.chain) {
    std::cout << "  " << generator_name(s.syllable.generator) << "^" << s.syllable.exponent << " -> "
              << to_string(s.image) << (s.contained ? " in " : " NOT in ") << s.target << "\n";
  }
  std::cout << "x = " << to_string(r.witness) << "\n";
  std::cout << "W(x) = " << to_string(r.image) << "\n";
  return kOk;
}

int run_gen_witness(const Options& o) {
  const auto c = build_certificate(gen_intertwined_pair(o.k));
  emit(o, to_json(c));
  return kOk;
}

int run_no_law(const Options& o) {
  const auto w = no_law_witness(parse_word(single_word(o)));
  std::cout << "word: " << to_string(w.word) << "\n";
  if (w.two_letter != w.word) std::cout << "two-letter form: " << to_string(w.two_letter) << "\n";
  std::cout << "k: " << w.k << "\n";
  std::cout << "N: " << w.power << "\n";
  std::cout << "x: " << to_string(w.x) << "\n";
  std::cout << "W(x): " << to_string(w.image) << "\n";
  if (!o.out.empty()) emit(o, to_json(w.certificate));
  return kOk;
}

int run_classify(const Options& o) {
  const Json j = read_json_file(o.files.at(0));
  MarkedAction act{action_from_json(j.contains("action") ? j["action"] : j), o.depth};
  const auto c = classify(act);
  for (const auto& line : c.trace) std::cout << "# " << line << "\n";
  std::cout << to_json(c).dump(2) << "\n";
  return c.verdict == Verdict::Inconclusive || c.verdict == Verdict::GlobalFixedPoint ? kNegative : kOk;
}

int run_order_compare(const Options& o) {
  if (o.words.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected --word u --word v");
  const DynOrder order = order_from_json(read_json_file(o.files.at(0)));
  const auto u = action_word(o.words[0], order.action);
  const auto v = action_word(o.words[1], order.action);
  const auto c = compare(order, u, v);
  const char* rel = c.order < 0 ? " < " : c.order > 0 ? " > " : " = ";
  std::cout << to_string(u) << rel << to_string(v) << (c.tiebreak ? "  (tiebreak)" : "") << "\n";
  return kOk;
}

int run_order_check_w(const Options& o) {
  const DynOrder order = order_from_json(read_json_file(o.files.at(0)));
  const ReducedWord w = parse_word(single_word(o));
  OrderContext ctx(order);
  const auto ce = is_W_order_on_ball(ctx, w, o.radius);
  if (!ce) {
    std::cout << "pass (radius " << o.radius << ")\n";
    return kOk;
  }
  std::cout << "counterexample: u = " << to_string(ce->u) << ", v = " << to_string(ce->v)
            << ", W(u,v) = " << to_string(ce->value) << " is not positive\n";
  return kNegative;
}

int run_order_dist(const Options& o) {
  if (o.files.size() != 2) throw Error(ErrorCode::InvalidArgument, "expected two order files");
  const auto d = order_distance(order_from_json(read_json_file(o.files[0])), order_from_json(read_json_file(o.files[1])),
                                o.radius);
  std::cout << "agreement radius: " << d.agreement_radius << "\n";
  std::cout << "distance: " << (d.at_resolution ? "<= " : "") << to_string(d.value) << "\n";
  return kOk;
}

int run_order_resilient(const Options& o) {
  const DynOrder order = order_from_json(read_json_file(o.files.at(0)));
  OrderContext ctx(order);
  const auto w = find_resilient_pair(ctx, o.radius, o.n_max);
  if (!w) {
    std::cout << "none (radius " << o.radius << ")\n";
    return kOk;
  }
  std::cout << "f = " << to_string(w->f) << "\ng = " << to_string(w->g) << "\nh1 = " << to_string(w->h1)
            << "\nh2 = " << to_string(w->h2) << "\n";
  for (const auto& [n, ok] : w->powers) std::cout << "n = " << n << ": " << (ok ? "holds" : "FAILS") << "\n";
  return kNegative;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMixedSign:
    case ErrorCode::SyllableOverflow:
    case ErrorCode::SearchExhausted:
    case ErrorCode::InvalidCertificate:
    case ErrorCode::PureBPower:
    case ErrorCode::NotIntertwined:
    case ErrorCode::OverlappingNeighborhoods: return kNegative;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for PL actions on the line, ping-pong certificates and dynamical orders"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto word_opt = [&](CLI::App* sub, const char* help) { sub->add_option("--word", o.words, help); };

  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  word_opt(reduce, "word, e.g. \"a^-1 b a^2\"");
  reduce->callback([&] { action = [&] { return run_reduce(o); }; });

  auto* violate = app.add_subcommand("violate", "Build f, g > 0 with W(f,g)(0) < 0");
  word_opt(violate, "mixed-sign word");
  violate->add_option("--random", o.random, "run on this many seeded random words instead");
  violate->add_option("--seed", o.seed, "seed for --random");
  violate->add_option("--out", o.out, "write the JSON to a file");
  violate->callback([&] { action = [&] { return run_violate(o); }; });

  auto* verify = app.add_subcommand("verify-cert", "Check a ping-pong certificate");
  verify->add_option("file", o.files, "certificate JSON")->required();
  verify->callback([&] { action = [&] { return run_verify_cert(o); }; });

  auto* image = app.add_subcommand("word-image", "Replay the containment chain of a word");
  image->add_option("file", o.files, "certificate JSON")->required();
  word_opt(image, "word");
  image->callback([&] { action = [&] { return run_word_image(o); }; });

  auto* gen = app.add_subcommand("gen-witness", "Emit a certificate for the k-th intertwined pair");
  gen->add_option("--k", o.k, "number of a-syllables covered")->check(CLI::Range(1, 64));
  gen->add_option("--out", o.out, "output file");
  gen->callback([&] { action = [&] { return run_gen_witness(o); }; });

  auto* nolaw = app.add_subcommand("no-law", "Certify that a word is not a law");
  word_opt(nolaw, "nontrivial word");
  nolaw->add_option("--out", o.out, "write the certificate to a file");
  nolaw->callback([&] { action = [&] { return run_no_law(o); }; });

  auto* cls = app.add_subcommand("classify", "Classify a marked action as type I, II or III");
  cls->add_option("file", o.files, "action JSON")->required();
  cls->add_option("--depth", o.depth, "word length bound")->check(CLI::Range(0, 16));
  cls->callback([&] { action = [&] { return run_classify(o); }; });

  auto* order = app.add_subcommand("order", "Dynamical left-orders");
  order->require_subcommand(1);
  auto* cmp = order->add_subcommand("compare", "Compare two words");
  cmp->add_option("file", o.files, "order JSON")->required();
  word_opt(cmp, "word (give twice)");
  cmp->callback([&] { action = [&] { return run_order_compare(o); }; });
  auto* checkw = order->add_subcommand("check-w", "Search a ball for a W-order violation");
  checkw->add_option("file", o.files, "order JSON")->required();
  word_opt(checkw, "the word W");
  checkw->add_option("--radius", o.radius, "ball radius")->check(CLI::Range(1, 8));
  checkw->callback([&] { action = [&] { return run_order_check_w(o); }; });
  auto* dist = order->add_subcommand("dist", "Distance between two orders");
  dist->add_option("files", o.files, "two order JSON files")->required()->expected(2);
  dist->add_option("--radius", o.radius, "largest radius examined")->check(CLI::Range(1, 8));
  dist->callback([&] { action = [&] { return run_order_dist(o); }; });
  auto* res = order->add_subcommand("resilient", "Search a ball for a resilient pair");
  res->add_option("file", o.files, "order JSON")->required();
  res->add_option("--radius", o.radius, "ball radius")->check(CLI::Range(1, 6));
  res->add_option("--n-max", o.n_max, "largest power re-checked")->check(CLI::Range(1, 64));
  res->callback([&] { action = [&] { return run_order_resilient(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const Error& e) {
    std::cout << std::flush;
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
