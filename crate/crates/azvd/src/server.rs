//! HTTP/JSON service. Stateless: every request reads the shared catalog
//! and registry, nothing is stored.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use azvd_core::azee::{print_node, ParamKind};
use azvd_core::catalog::SlotArity;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::api::{compile_text, render_svg, synthesize_text, ApiError, ErrorClass};
use crate::formats::{asset_document, diagram_from_value, diagram_to_value, Bundle};

type Shared = Arc<Bundle>;

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = match self.class() {
            ErrorClass::Schema => StatusCode::BAD_REQUEST,
            ErrorClass::NotFound => StatusCode::NOT_FOUND,
            ErrorClass::Invalid => StatusCode::UNPROCESSABLE_ENTITY,
        };
        (status, Json(self)).into_response()
    }
}

pub fn router(bundle: Shared) -> Router {
    Router::new()
        .route("/catalog", get(catalog))
        .route("/assets/{id}", get(asset))
        .route("/render", post(render))
        .route("/compile", post(compile))
        .route("/synthesize", post(synthesize))
        .with_state(bundle)
}

/// Serves until interrupted.
pub async fn serve(bundle: Bundle, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(Arc::new(bundle)))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

fn json_body(body: &[u8]) -> Result<Value, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError::new("bad-json", e.to_string()))
}

async fn catalog(State(b): State<Shared>) -> Json<Value> {
    let cat = &b.catalog;
    let templates: Vec<Value> = cat
        .templates()
        .iter()
        .map(|g| {
            let variants: Vec<Value> = g
                .variants
                .iter()
                .map(|id| {
                    let l = cat.layout(id).expect("variants exist");
                    let slots: Vec<Value> = l
                        .slots()
                        .map(|(slot, arity)| {
                            json!({"id": slot, "kind": match arity {
                                SlotArity::Single => "single",
                                SlotArity::List => "list",
                            }})
                        })
                        .collect();
                    json!({"layout": l.id, "variant": l.variant, "slots": slots})
                })
                .collect();
            json!({
                "id": g.id,
                "template": print_node(&g.template),
                "default": g.default_layout(),
                "variants": variants,
            })
        })
        .collect();
    let rules: Vec<Value> = b
        .registry
        .rules()
        .map(|r| {
            let params: Vec<Value> = r
                .params
                .iter()
                .map(|p| {
                    json!({"name": p.name, "kind": match p.kind {
                        ParamKind::Expr => "EXPR",
                        ParamKind::List => "LIST",
                    }})
                })
                .collect();
            json!({"name": r.name, "params": params, "doc": r.doc})
        })
        .collect();
    let assets: BTreeMap<&str, String> = cat.assets().keys().map(|id| (id.as_str(), format!("/assets/{id}"))).collect();
    Json(json!({
        "templates": templates,
        "rules": rules,
        "constants": b.registry.constants(),
        "assets": assets,
    }))
}

async fn asset(State(b): State<Shared>, Path(id): Path<String>) -> Result<Response, ApiError> {
    let asset = b
        .catalog
        .asset(&id)
        .ok_or_else(|| ApiError::new("unknown-asset", format!("unknown asset `{id}`")))?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], asset_document(asset)).into_response())
}

async fn render(State(b): State<Shared>, body: Bytes) -> Result<Response, ApiError> {
    let d = diagram_from_value(json_body(&body)?)?;
    let svg = render_svg(&d, &b.catalog)?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

async fn compile(State(b): State<Shared>, body: Bytes) -> Result<Json<Value>, ApiError> {
    let d = diagram_from_value(json_body(&body)?)?;
    Ok(Json(json!({"azee": compile_text(&d, &b.catalog)?})))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SynthesizeRequest {
    azee: String,
    #[serde(default)]
    policy: Option<PolicyDoc>,
}

/// `"default"` or a map from template id to layout id.
#[derive(Deserialize)]
#[serde(untagged)]
enum PolicyDoc {
    Named(String),
    Explicit(BTreeMap<String, String>),
}

async fn synthesize(State(b): State<Shared>, body: Bytes) -> Result<Json<Value>, ApiError> {
    let req: SynthesizeRequest =
        serde_json::from_value(json_body(&body)?).map_err(|e| ApiError::new("schema-error", e.to_string()))?;
    let variants = match req.policy {
        None => BTreeMap::new(),
        Some(PolicyDoc::Named(n)) if n == "default" => BTreeMap::new(),
        Some(PolicyDoc::Named(n)) => {
            return Err(ApiError::new("schema-error", format!("unknown policy {n:?}")));
        }
        Some(PolicyDoc::Explicit(m)) => m,
    };
    let d = synthesize_text(&req.azee, &b.catalog, &b.registry, &variants)?;
    Ok(Json(diagram_to_value(&d)))
}
