package org.fixture;

class Service {
  /** Coordinates the work of this component for every caller in the application. */
  public void start() {}

  private void stop() {}

  void pause() {}
}
