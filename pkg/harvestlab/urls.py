"""URL configuration for the faultlab server."""

from django.urls import path

from .faultlab import views

urlpatterns = [
    path('graphql/', views.graphql_endpoint, name='graphql'),
    path('faults/', views.list_faults, name='faults'),
    path('health/', views.health_check, name='health_check'),
]
