#pragma once

// JSON-over-HTTP front end: frameworks, facet reports, significance tables
// and navigation sessions. In-memory only; ids are random hex tokens.

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "argfacets/facets.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/io.hpp"
#include "argfacets/search.hpp"
#include "argfacets/session.hpp"
#include "httplib.h"
#include "json.hpp"

namespace argfacets {

namespace wire {

using nlohmann::json;

inline json names(const ArgumentationFramework& af, const ArgumentSet& s) { return af.names_of(s); }

inline std::string_view polarity_name(Polarity p) {
  return p == Polarity::approve ? "approve" : "disapprove";
}

inline json literal(const ArgumentationFramework& af, const Literal& l) {
  return {{"argument", af.name(l.argument)},
          {"polarity", polarity_name(l.polarity)},
          {"literal", to_string(af, l)}};
}

inline json score(const Rational& r) { return {{"num", r.num()}, {"den", r.den()}}; }

inline json entry(const ArgumentationFramework& af, const SignificanceEntry& e) {
  auto j = literal(af, e.literal);
  j["remaining_facets"] = e.remaining_facets;
  j["score"] = score(e.score);
  j["decimal"] = e.score.to_double();
  return j;
}

inline json report(const ArgumentationFramework& af, const FacetReport& r) {
  return {{"semantics", to_string(r.semantics)},
          {"cred", names(af, r.cred)},
          {"skep", names(af, r.skep)},
          {"facets", names(af, r.facets)},
          {"count", r.facets.size()},
          {"complete", r.complete}};
}

inline json table(const ArgumentationFramework& af, const std::vector<SignificanceEntry>& t) {
  json out = json::array();
  for (const auto& e : t) out.push_back(entry(af, e));
  return out;
}

}  // namespace wire

struct ServiceOptions {
  std::chrono::milliseconds deadline{30'000};  // per request
  std::string cors_origin = "*";
};

class Service {
 public:
  using json = nlohmann::json;
  using Options = ServiceOptions;

  explicit Service(Options options = {}) : options_(std::move(options)) { routes(); }

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  std::string add_framework(std::string name, ArgumentationFramework af) {
    auto entry = std::make_shared<FrameworkEntry>(
        FrameworkEntry{fresh_id(), std::move(name),
                       std::make_shared<const ArgumentationFramework>(std::move(af))});
    std::unique_lock lock(frameworks_mutex_);
    while (frameworks_.contains(entry->id)) entry->id = fresh_id();
    frameworks_.emplace(entry->id, entry);
    return entry->id;
  }

  // Registers every parseable instance in dir; returns how many.
  std::size_t load_examples(const std::string& dir) {
    std::size_t n = 0;
    std::vector<std::filesystem::path> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.is_regular_file() && format_from_path(e.path().string())) paths.push_back(e.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      try {
        add_framework(p.filename().string(), load_framework(p.string()));
        ++n;
      } catch (const Error&) {
      }
    }
    return n;
  }

  httplib::Server& http() noexcept { return server_; }

  // Port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port) {
    if (port == 0) return server_.bind_to_any_port(host);
    return server_.bind_to_port(host, port) ? port : -1;
  }
  bool listen() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() const { server_.wait_until_ready(); }

 private:
  struct FrameworkEntry {
    std::string id;
    std::string name;
    std::shared_ptr<const ArgumentationFramework> af;
  };

  struct SessionEntry {
    std::string id;
    std::string framework_id;
    std::mutex mutex;
    std::unique_ptr<NavigationSession> session;
  };

  struct HttpError {
    int status;
    std::string message;
  };

  Deadline request_deadline() const { return Clock::now() + options_.deadline; }

  std::string fresh_id() {
    std::lock_guard lock(rng_mutex_);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string id(16, '0');
    auto bits = rng_();
    for (auto& c : id) {
      c = kHex[bits & 0xF];
      bits >>= 4;
    }
    return id;
  }

  static void send(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
  }

  static json parse_body(const httplib::Request& req) {
    auto body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) throw HttpError{400, "body must be a JSON object"};
    return body;
  }

  static std::string string_field(const json& body, const char* key) {
    auto it = body.find(key);
    if (it == body.end() || !it->is_string())
      throw HttpError{400, std::string("missing string field '") + key + "'"};
    return it->get<std::string>();
  }

  static Semantics semantics_of(const std::string& text) {
    auto s = parse_semantics(text);
    if (!s) throw HttpError{400, "unknown semantics '" + text + "'"};
    return *s;
  }

  static Semantics semantics_param(const httplib::Request& req) {
    if (!req.has_param("semantics")) throw HttpError{400, "missing query parameter 'semantics'"};
    return semantics_of(req.get_param_value("semantics"));
  }

  std::shared_ptr<FrameworkEntry> framework(const std::string& id) {
    std::shared_lock lock(frameworks_mutex_);
    auto it = frameworks_.find(id);
    if (it == frameworks_.end()) throw HttpError{404, "unknown framework '" + id + "'"};
    return it->second;
  }

  std::shared_ptr<SessionEntry> session(const std::string& id) {
    std::lock_guard lock(sessions_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw HttpError{404, "unknown session '" + id + "'"};
    return it->second;
  }

  static json handle(const FrameworkEntry& e) {
    return {{"id", e.id},
            {"name", e.name},
            {"n_arguments", e.af->size()},
            {"n_attacks", e.af->attack_count()}};
  }

  static json session_handle(const SessionEntry& s) {
    return {{"id", s.id},
            {"framework_id", s.framework_id},
            {"semantics", to_string(s.session->semantics())},
            {"history_length", s.session->history().size()}};
  }

  // Caller holds s.mutex.
  static json session_state(SessionEntry& s) {
    auto& nav = *s.session;
    const auto& af = nav.framework();
    auto out = session_handle(s);
    json history = json::array();
    for (const auto& l : nav.history()) history.push_back(wire::literal(af, l));
    out["history"] = std::move(history);
    const auto& r = nav.report();
    out["cred"] = wire::names(af, r.cred);
    out["skep"] = wire::names(af, r.skep);
    out["facets"] = wire::names(af, r.facets);
    out["significance"] = wire::table(af, nav.significance());
    auto sample = nav.sample_extension();
    out["sample_extension"] = sample ? wire::names(af, *sample) : json(nullptr);
    return out;
  }

  static json budget_exceeded(const ArgumentationFramework& af, const FacetReport& partial) {
    auto out = wire::report(af, partial);
    out["budget_exceeded"] = true;
    out["exhausted"] = false;
    return out;
  }

  template <class Handler>
  httplib::Server::Handler guarded(Handler h) {
    return [h = std::move(h)](const httplib::Request& req, httplib::Response& res) {
      try {
        h(req, res);
      } catch (const HttpError& e) {
        send(res, e.status, {{"error", e.message}});
      } catch (const std::exception& e) {
        send(res, 500, {{"error", e.what()}});
      }
    };
  }

  void routes() {
    server_.set_default_headers({{"Access-Control-Allow-Origin", options_.cors_origin},
                                 {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                 {"Access-Control-Allow-Headers", "Content-Type"}});
    server_.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) send(res, res.status, {{"error", httplib::status_message(res.status)}});
    });

    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      send(res, 200, {{"status", "ok"}});
    });

    server_.Post("/frameworks", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto format = parse_format(string_field(body, "format"));
      if (!format) throw HttpError{400, "unknown format"};
      auto text = string_field(body, "text");
      std::string name = body.contains("name") && body["name"].is_string()
                             ? body["name"].get<std::string>()
                             : "upload";
      try {
        auto id = add_framework(name, parse_framework(text, *format));
        send(res, 201, handle(*framework(id)));
      } catch (const ParseError& e) {
        send(res, 422, {{"error", e.what()}, {"line", e.line()}});
      }
    }));

    server_.Get("/frameworks", guarded([this](const httplib::Request&, httplib::Response& res) {
      json list = json::array();
      std::shared_lock lock(frameworks_mutex_);
      for (const auto& [id, e] : frameworks_) list.push_back(handle(*e));
      send(res, 200, {{"frameworks", list}});
    }));

    server_.Get(R"(/frameworks/([0-9a-f]+))",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  auto e = framework(req.matches[1]);
                  const auto& af = *e->af;
                  auto out = handle(*e);
                  out["arguments"] = af.names();
                  json attacks = json::array();
                  for (auto [a, b] : af.attacks()) attacks.push_back({af.name(a), af.name(b)});
                  out["attacks"] = std::move(attacks);
                  send(res, 200, out);
                }));

    server_.Get(R"(/frameworks/([0-9a-f]+)/extensions)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  auto e = framework(req.matches[1]);
                  auto sem = semantics_param(req);
                  Budget budget{std::nullopt, options_.deadline};
                  if (req.has_param("max_models")) {
                    const auto& v = req.get_param_value("max_models");
                    std::size_t m = 0;
                    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), m);
                    if (ec != std::errc() || p != v.data() + v.size() || m == 0)
                      throw HttpError{400, "max_models must be a positive integer"};
                    budget.max_models = m;
                  }
                  const auto& af = *e->af;
                  auto r = enumerate(af, sem, Constraints::none(af), budget);
                  json exts = json::array();
                  for (const auto& x : r.extensions) exts.push_back(wire::names(af, x));
                  json out{{"semantics", to_string(sem)},
                           {"extensions", exts},
                           {"count", r.extensions.size()},
                           {"exhausted", r.exhausted}};
                  if (r.timed_out) out["budget_exceeded"] = true;
                  send(res, r.timed_out ? 202 : 200, out);
                }));

    server_.Get(R"(/frameworks/([0-9a-f]+)/facets)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  auto e = framework(req.matches[1]);
                  auto sem = semantics_param(req);
                  const auto& af = *e->af;
                  Reasoner reasoner(af, sem, request_deadline());
                  auto r = facet_report(reasoner, Constraints::none(af));
                  if (!r.complete) return send(res, 202, budget_exceeded(af, r));
                  send(res, 200, wire::report(af, r));
                }));

    server_.Get(R"(/frameworks/([0-9a-f]+)/significance)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  auto e = framework(req.matches[1]);
                  auto sem = semantics_param(req);
                  const auto& af = *e->af;
                  Reasoner reasoner(af, sem, request_deadline());
                  auto r = facet_report(reasoner, Constraints::none(af));
                  if (!r.complete) return send(res, 202, budget_exceeded(af, r));
                  auto t = significance_table(reasoner, r);
                  if (reasoner.timed_out()) return send(res, 202, budget_exceeded(af, r));
                  send(res, 200,
                       {{"semantics", to_string(sem)},
                        {"facets", wire::names(af, r.facets)},
                        {"entries", wire::table(af, t)}});
                }));

    server_.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      auto body = parse_body(req);
      auto fw = framework(string_field(body, "framework_id"));
      auto sem = semantics_of(string_field(body, "semantics"));
      auto entry = std::make_shared<SessionEntry>();
      entry->id = fresh_id();
      entry->framework_id = fw->id;
      try {
        entry->session = std::make_unique<NavigationSession>(fw->af, sem, request_deadline());
      } catch (const BudgetExceeded& e) {
        return send(res, 202, budget_exceeded(*fw->af, e.partial()));
      }
      {
        std::lock_guard lock(sessions_mutex_);
        while (sessions_.contains(entry->id)) entry->id = fresh_id();
        sessions_.emplace(entry->id, entry);
      }
      send(res, 201, session_handle(*entry));
    }));

    server_.Get("/sessions", guarded([this](const httplib::Request&, httplib::Response& res) {
      std::vector<std::shared_ptr<SessionEntry>> all;
      {
        std::lock_guard lock(sessions_mutex_);
        for (const auto& [id, s] : sessions_) all.push_back(s);
      }
      json list = json::array();
      for (const auto& s : all) {
        std::lock_guard lock(s->mutex);
        list.push_back(session_handle(*s));
      }
      send(res, 200, {{"sessions", list}});
    }));

    server_.Get(R"(/sessions/([0-9a-f]+))",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  with_session(req, res, [](SessionEntry&) {});
                }));

    server_.Post(R"(/sessions/([0-9a-f]+)/approve)",
                 guarded([this](const httplib::Request& req, httplib::Response& res) {
                   auto body = parse_body(req);
                   auto name = string_field(body, "argument");
                   auto polarity = Polarity::approve;
                   if (body.contains("polarity")) {
                     auto p = string_field(body, "polarity");
                     if (p == "disapprove") {
                       polarity = Polarity::disapprove;
                     } else if (p != "approve") {
                       throw HttpError{400, "polarity must be 'approve' or 'disapprove'"};
                     }
                   }
                   with_session(req, res, [&](SessionEntry& s) {
                     auto a = s.session->framework().find(name);
                     if (!a) throw HttpError{409, "'" + name + "' is not an argument"};
                     s.session->approve({*a, polarity});
                   });
                 }));

    server_.Post(R"(/sessions/([0-9a-f]+)/undo)",
                 guarded([this](const httplib::Request& req, httplib::Response& res) {
                   with_session(req, res, [](SessionEntry& s) { s.session->undo(); });
                 }));
  }

  // Runs op under the session's lock, then replies with the session state.
  template <class Op>
  void with_session(const httplib::Request& req, httplib::Response& res, Op op) {
    auto s = session(req.matches[1]);
    std::lock_guard lock(s->mutex);
    auto& nav = *s->session;
    nav.set_deadline(request_deadline());
    try {
      op(*s);
      send(res, 200, session_state(*s));
    } catch (const NotAFacet& e) {
      send(res, 409, {{"error", e.what()}});
    } catch (const EmptyHistory& e) {
      send(res, 409, {{"error", e.what()}});
    } catch (const BudgetExceeded& e) {
      send(res, 202, budget_exceeded(nav.framework(), e.partial()));
    } catch (const DeadlineExceeded&) {
      send(res, 202, budget_exceeded(nav.framework(), nav.report()));
    }
    nav.set_deadline(std::nullopt);
  }

  Options options_;
  httplib::Server server_;

  std::shared_mutex frameworks_mutex_;
  std::map<std::string, std::shared_ptr<FrameworkEntry>> frameworks_;

  std::mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<SessionEntry>> sessions_;

  std::mutex rng_mutex_;
  std::mt19937_64 rng_{std::random_device{}()};
};

}  // namespace argfacets
