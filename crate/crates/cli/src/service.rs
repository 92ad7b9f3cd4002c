//! Stateless JSON service for playing DEK. Every request carries the whole
//! game state, which is revalidated before use.
//!
//! | route              | body                                   | reply                         |
//! |--------------------|----------------------------------------|-------------------------------|
//! | `POST /game/new`   | `{"shuffle":[..], "variant"?}`         | state (full or visible)       |
//! | `POST /game/moves` | `{"state":{..}}`                       | `[{"move":"PLAY_DECK"}, ..]`  |
//! | `POST /game/apply` | `{"state":{..}, "move":"TO_LEFT"}`     | state                         |
//! | `POST /game/hint`  | `{"state":{..}, "mode":"policy"}`      | `{"move":..,"value":{..}}`    |
//! | `GET /health`      |                                        | `{"ok":true}`                 |

use std::net::SocketAddr;

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use permdek_core::dek::{hint, hint_visible};
use permdek_core::{DekMove, DekState, Error, HintMode, Permutation, VisibleState, WinValue};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub fn router() -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/game/new", post(new_game))
        .route("/game/moves", post(moves))
        .route("/game/apply", post(apply))
        .route("/game/hint", post(game_hint))
}

pub async fn serve(addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    log::info!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router())
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn bad_request(message: impl ToString) -> Self {
        Self {
            status: StatusCode::BAD_REQUEST,
            message: message.to_string(),
        }
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::GameLost | Error::GameWon => StatusCode::CONFLICT,
            _ => StatusCode::BAD_REQUEST,
        };
        Self {
            status,
            message: e.to_string(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        log::debug!("{} {}", self.status, self.message);
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

/// Request bodies must be JSON objects; serde would otherwise also accept
/// structs written positionally as arrays.
fn parse<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    let value: Value = serde_json::from_slice(body).map_err(ApiError::bad_request)?;
    if !value.is_object() {
        return Err(ApiError::bad_request("request body must be a JSON object"));
    }
    serde_json::from_value(value).map_err(ApiError::bad_request)
}

async fn health() -> Json<Value> {
    Json(json!({ "ok": true }))
}

#[derive(Deserialize, Default, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum Variant {
    #[default]
    Full,
    Visible,
}

#[derive(Deserialize)]
struct NewGame {
    shuffle: Permutation,
    #[serde(default)]
    variant: Variant,
}

async fn new_game(body: Bytes) -> Result<Response, ApiError> {
    let req: NewGame = parse(&body)?;
    let n = req.shuffle.len() as u32;
    let state = DekState::from_parts(req.shuffle.into_vec(), Vec::new(), 1, n)?;
    Ok(match req.variant {
        Variant::Full => Json(state).into_response(),
        Variant::Visible => Json(state.visible()).into_response(),
    })
}

#[derive(Deserialize)]
struct StateOnly {
    state: DekState,
}

#[derive(Serialize)]
struct MoveJson {
    #[serde(rename = "move")]
    mv: DekMove,
}

async fn moves(body: Bytes) -> ApiResult<Vec<MoveJson>> {
    let req: StateOnly = parse(&body)?;
    let moves = req.state.legal_moves()?;
    Ok(Json(moves.into_iter().map(|mv| MoveJson { mv }).collect()))
}

#[derive(Deserialize)]
struct Apply {
    state: DekState,
    #[serde(rename = "move")]
    mv: DekMove,
}

async fn apply(body: Bytes) -> ApiResult<DekState> {
    let req: Apply = parse(&body)?;
    Ok(Json(req.state.apply_move(req.mv)?))
}

#[derive(Deserialize)]
struct HintRequest {
    state: Value,
    mode: HintMode,
}

#[derive(Serialize)]
struct HintReply {
    #[serde(rename = "move")]
    mv: DekMove,
    value: WinValue,
}

/// Full states carry `deck`; anything else is read as the visible variant,
/// which only supports policy hints.
enum AnyState {
    Full(DekState),
    Visible(VisibleState),
}

fn any_state(v: Value) -> Result<AnyState, ApiError> {
    if v.get("deck").is_some() {
        serde_json::from_value(v).map(AnyState::Full)
    } else {
        serde_json::from_value(v).map(AnyState::Visible)
    }
    .map_err(ApiError::bad_request)
}

async fn game_hint(body: Bytes) -> ApiResult<HintReply> {
    let req: HintRequest = parse(&body)?;
    let state = any_state(req.state)?;
    let (mv, value) = tokio::task::spawn_blocking(move || match (state, req.mode) {
        (AnyState::Full(s), mode) => hint(&s, mode),
        (AnyState::Visible(v), HintMode::Policy) => hint_visible(&v),
        (AnyState::Visible(_), HintMode::Clairvoyant) => Err(Error::DeckHidden),
    })
    .await
    .map_err(|e| ApiError {
        status: StatusCode::INTERNAL_SERVER_ERROR,
        message: e.to_string(),
    })??;
    Ok(Json(HintReply { mv, value }))
}
