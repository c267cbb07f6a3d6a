//! HTTP API over exploration sessions.
//!
//! Every successful response is `{"id": ..., "state": ...}` (export returns
//! the export document instead); failures are `{"error": "..."}` with 400
//! for malformed requests, 404 for unknown sessions and 409 for illegal
//! moves or a session that is already handling a request.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, TryLockError};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::session::{Move, Seed, Session, SessionError};

type Shared = Arc<Mutex<Session>>;

#[derive(Clone, Default)]
pub struct AppState {
    sessions: Arc<Mutex<HashMap<String, Shared>>>,
}

impl AppState {
    pub fn new() -> Self {
        Self::default()
    }

    /// The session with this id, if any.
    pub fn session(&self, id: &str) -> Option<Shared> {
        self.sessions.lock().expect("session table poisoned").get(id).cloned()
    }

    fn insert(&self, session: Session) -> String {
        let mut table = self.sessions.lock().expect("session table poisoned");
        let id = loop {
            let id = format!("{:016x}", rand::random::<u64>());
            if !table.contains_key(&id) {
                break id;
            }
        };
        table.insert(id.clone(), Arc::new(Mutex::new(session)));
        id
    }

    /// Runs `f` on the session, failing fast if another request holds it.
    fn with<T>(&self, id: &str, f: impl FnOnce(&mut Session) -> Result<T, SessionError>) -> Result<T, SessionError> {
        let shared = self.session(id).ok_or_else(|| SessionError::NotFound(id.to_string()))?;
        let mut session = match shared.try_lock() {
            Ok(s) => s,
            Err(TryLockError::WouldBlock) => return Err(SessionError::Busy),
            Err(TryLockError::Poisoned(p)) => p.into_inner(),
        };
        f(&mut session)
    }
}

impl IntoResponse for SessionError {
    fn into_response(self) -> Response {
        let status = match self {
            SessionError::NotFound(_) => StatusCode::NOT_FOUND,
            SessionError::Illegal(_) | SessionError::Busy => StatusCode::CONFLICT,
            SessionError::BadRequest(_) => StatusCode::BAD_REQUEST,
        };
        (status, Json(json!({ "error": self.to_string() }))).into_response()
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/session", post(create))
        .route("/session/import", post(import))
        .route("/session/{id}", get(show))
        .route("/session/{id}/mutate", post(mutate))
        .route("/session/{id}/flip", post(flip))
        .route("/session/{id}/undo", post(undo))
        .route("/session/{id}/export", get(export))
        .with_state(state)
}

fn parse<T: for<'de> Deserialize<'de>>(body: &Bytes) -> Result<T, SessionError> {
    serde_json::from_slice(body).map_err(|e| SessionError::BadRequest(format!("malformed request body: {e}")))
}

fn reply(id: &str, session: &Session) -> Json<Value> {
    Json(json!({ "id": id, "state": session.state() }))
}

async fn create(State(app): State<AppState>, body: Bytes) -> Result<Json<Value>, SessionError> {
    let seed = Seed::from_request(&parse::<Value>(&body)?)?;
    let session = Session::new(seed);
    let state = session.state();
    let id = app.insert(session);
    Ok(Json(json!({ "id": id, "state": state })))
}

async fn import(State(app): State<AppState>, body: Bytes) -> Result<Json<Value>, SessionError> {
    let session = Session::import(&parse::<Value>(&body)?)?;
    let state = session.state();
    let id = app.insert(session);
    Ok(Json(json!({ "id": id, "state": state })))
}

async fn show(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, SessionError> {
    app.with(&id, |s| Ok(reply(&id, s)))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MutateBody {
    vertex: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FlipBody {
    diagonal: String,
    choice: String,
}

async fn mutate(
    State(app): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<Value>, SessionError> {
    app.with(&id, |s| {
        let MutateBody { vertex } = parse(&body)?;
        s.apply(Move::Mutate { vertex })?;
        Ok(reply(&id, s))
    })
}

async fn flip(State(app): State<AppState>, Path(id): Path<String>, body: Bytes) -> Result<Json<Value>, SessionError> {
    app.with(&id, |s| {
        let FlipBody { diagonal, choice } = parse(&body)?;
        s.apply(Move::Flip { diagonal, choice })?;
        Ok(reply(&id, s))
    })
}

async fn undo(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, SessionError> {
    app.with(&id, |s| {
        s.undo()?;
        Ok(reply(&id, s))
    })
}

async fn export(State(app): State<AppState>, Path(id): Path<String>) -> Result<Json<Value>, SessionError> {
    app.with(&id, |s| Ok(Json(s.export())))
}

/// Serves the API on `127.0.0.1:port` until the process is stopped.
pub async fn serve(port: u16) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(("127.0.0.1", port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(AppState::new())).await
}
